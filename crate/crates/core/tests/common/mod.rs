#![allow(dead_code)]

pub mod cones_check;
pub mod fm;
pub mod poset_check;
pub mod restriction;

use serde::{Deserialize, Serialize};

use super::OrbitPoset;
use crate::classify::{Comp, OrbitLabel};
use crate::error::{Error, Result};

/// Unlabelled Hasse diagram.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AbstractDiagram {
    pub vertices: usize,
    pub covers: Vec<(usize, usize)>,
}

impl AbstractDiagram {
    fn reach(&self) -> Vec<Vec<bool>> {
        let n = self.vertices;
        let mut r = vec![vec![false; n]; n];
        for (i, row) in r.iter_mut().enumerate() {
            row[i] = true;
        }
        for &(a, b) in &self.covers {
            r[a][b] = true;
        }
        for k in 0..n {
            for i in 0..n {
                if r[i][k] {
                    for j in 0..n {
                        if r[k][j] {
                            r[i][j] = true;
                        }
                    }
                }
            }
        }
        r
    }

    fn preds(&self, v: usize) -> Vec<usize> {
        let mut p: Vec<usize> = self.covers.iter().filter(|e| e.1 == v).map(|e| e.0).collect();
        p.sort_unstable();
        p
    }

    fn succs(&self, v: usize) -> Vec<usize> {
        let mut s: Vec<usize> = self.covers.iter().filter(|e| e.0 == v).map(|e| e.1).collect();
        s.sort_unstable();
        s
    }
}

/// Forget the labels of a poset; vertex `perm[i]` stands for label `i`.
pub fn abstract_diagram_of(p: &OrbitPoset, perm: &[usize]) -> AbstractDiagram {
    AbstractDiagram {
        vertices: p.labels.len(),
        covers: p.covers.iter().map(|&(a, b)| (perm[a], perm[b])).collect(),
    }
}

/// Labels per vertex. `symmetric` is set when the two pure strings have equal
/// length, in which case the first string found was taken for the first summand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Assignment {
    pub labels: Vec<OrbitLabel>,
    pub symmetric: bool,
}

fn unassignable(msg: impl Into<String>) -> Error {
    Error::Unassignable(msg.into())
}

/// Pure string starting at `start`: repeatedly step to the successor whose
/// only predecessor is the current vertex.
fn pure_string(d: &AbstractDiagram, v0: usize, start: usize) -> Result<Vec<usize>> {
    let mut chain = vec![v0, start];
    let mut cur = start;
    loop {
        let next: Vec<usize> = d
            .succs(cur)
            .into_iter()
            .filter(|&w| d.preds(w) == [cur])
            .collect();
        match next.as_slice() {
            [] => return Ok(chain),
            [w] => {
                chain.push(*w);
                cur = *w;
            }
            _ => return Err(unassignable("pure string branches")),
        }
    }
}

/// Match vertices of an abstract reducible-case diagram with orbit labels,
/// given the two component chains (zero first) and the non-apparent orbits
/// listed in increasing order inside each product.
pub fn assign_orbits(
    d: &AbstractDiagram,
    comp_a: &[Comp],
    comp_b: &[Comp],
    z: &[(OrbitLabel, Comp, Comp)],
) -> Result<Assignment> {
    let n = d.vertices;
    let minima: Vec<usize> = (0..n).filter(|&v| d.preds(v).is_empty()).collect();
    let [v0] = minima.as_slice() else {
        return Err(unassignable("diagram needs a unique minimum"));
    };
    let v0 = *v0;
    let starts = d.succs(v0);
    let mut strings = starts
        .iter()
        .map(|&s| pure_string(d, v0, s))
        .collect::<Result<Vec<_>>>()?;
    if comp_b.len() == 1 && strings.len() == 1 {
        strings.push(vec![v0]);
    }
    if strings.len() != 2 {
        return Err(unassignable("the minimum must have two successors"));
    }
    let fits = |a: &Vec<usize>, b: &Vec<usize>| a.len() == comp_a.len() && b.len() == comp_b.len();
    let straight = fits(&strings[0], &strings[1]);
    let swapped = fits(&strings[1], &strings[0]);
    let symmetric = straight && swapped;
    let (sa, sb) = if straight {
        (strings[0].clone(), strings[1].clone())
    } else if swapped {
        (strings[1].clone(), strings[0].clone())
    } else {
        return Err(unassignable("pure strings do not match the component chains"));
    };

    let mut out: Vec<Option<OrbitLabel>> = vec![None; n];
    for (k, &v) in sa.iter().enumerate() {
        out[v] = Some(OrbitLabel::from_components(comp_a[k], comp_b[0]));
    }
    for (k, &v) in sb.iter().enumerate().skip(1) {
        out[v] = Some(OrbitLabel::from_components(comp_a[0], comp_b[k]));
    }

    let reach = d.reach();
    let mut pairs: Vec<(usize, usize)> = (1..sa.len())
        .flat_map(|i| (1..sb.len()).map(move |j| (i, j)))
        .collect();
    pairs.sort_by_key(|&(i, j)| std::cmp::Reverse((i + j, i)));
    for (i, j) in pairs {
        let (ca, cb) = (comp_a[i], comp_b[j]);
        let mut set: Vec<usize> = (0..n)
            .filter(|&v| out[v].is_none() && reach[sa[i]][v] && reach[sb[j]][v])
            .collect();
        let zs: Vec<OrbitLabel> = z
            .iter()
            .filter(|(_, a, b)| (*a, *b) == (ca, cb))
            .map(|(l, _, _)| *l)
            .collect();
        if set.len() != zs.len() + 1 {
            return Err(unassignable(format!(
                "product {ca}×{cb} has {} vertices, expected {}",
                set.len(),
                zs.len() + 1
            )));
        }
        set.sort_by(|&x, &y| {
            if x == y {
                std::cmp::Ordering::Equal
            } else if reach[x][y] {
                std::cmp::Ordering::Less
            } else {
                std::cmp::Ordering::Greater
            }
        });
        if set.windows(2).any(|w| !reach[w[0]][w[1]]) {
            return Err(unassignable(format!("product {ca}×{cb} is not a chain")));
        }
        let top = set.pop().expect("nonempty");
        out[top] = Some(OrbitLabel::y(ca, cb));
        for (v, l) in set.into_iter().zip(zs) {
            out[v] = Some(l);
        }
    }
    let labels = out
        .into_iter()
        .collect::<Option<Vec<_>>>()
        .ok_or_else(|| unassignable("vertices left without an orbit"))?;
    Ok(Assignment { labels, symmetric })
}

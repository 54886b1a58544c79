use orbitdual::cones::{face_meets_valuation, ConeSystem};
use orbitdual::exactlin::{seeded, small_int};
use orbitdual::Scalar;

/// Positive integer points `c ∈ {1..=GRID}^S` with every root nonpositive.
const GRID: i64 = 12;

fn grid_hit(roots: &[Vec<i64>], face: &[usize]) -> bool {
    let m = face.len();
    let mut c = vec![1i64; m];
    loop {
        if roots
            .iter()
            .all(|s| face.iter().zip(&c).map(|(&i, &ci)| s[i] * ci).sum::<i64>() <= 0)
        {
            return true;
        }
        let mut k = 0;
        loop {
            if k == m {
                return false;
            }
            c[k] += 1;
            if c[k] <= GRID {
                break;
            }
            c[k] = 1;
            k += 1;
        }
    }
}

/// Random systems of rank ≤ 4 agree with a grid search on every face.
pub fn random_systems_agree(count: usize, seed: u64) -> (usize, usize) {
    let mut rng = seeded(seed);
    let (mut faces, mut disagreements) = (0, 0);
    for _ in 0..count {
        let r = (small_int(&mut rng, 1) + 3) as usize; // 2..=4
        let k = (small_int(&mut rng, 2) + 2) as usize; // 0..=4
        let roots: Vec<Vec<i64>> = (0..k).map(|_| (0..r).map(|_| small_int(&mut rng, 1)).collect()).collect();
        let sys = ConeSystem::new(
            r,
            roots.iter().map(|v| v.iter().map(|&x| Scalar::from_int(x)).collect()).collect(),
        )
        .unwrap();
        for mask in 1u32..1 << r {
            let face: Vec<usize> = (0..r).filter(|i| mask >> i & 1 == 1).collect();
            faces += 1;
            if face_meets_valuation(&sys, &face) != grid_hit(&roots, &face) {
                disagreements += 1;
            }
        }
    }
    (faces, disagreements)
}


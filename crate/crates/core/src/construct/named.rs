use crate::error::{Error, Result};
use crate::permcore::{PermGroup, Permutation};

fn cycle(n: usize, pts: impl IntoIterator<Item = usize>) -> Permutation {
    Permutation::from_cycles(n, &[pts.into_iter().collect()]).expect("valid cycle")
}

/// S_n on n points.
pub fn symmetric(n: usize, cap: usize) -> Result<PermGroup> {
    let n = n.max(1);
    let mut gens = Vec::new();
    if n >= 2 {
        gens.push(cycle(n, [1, 2]));
    }
    if n >= 3 {
        gens.push(cycle(n, 1..=n));
    }
    PermGroup::with_cap(n, gens, cap)
}

/// A_n on n points, generated by the 3-cycles (1,2,k).
pub fn alternating(n: usize, cap: usize) -> Result<PermGroup> {
    let n = n.max(1);
    let gens = (3..=n).map(|k| cycle(n, [1, 2, k])).collect();
    PermGroup::with_cap(n, gens, cap)
}

/// C_n as an n-cycle.
pub fn cyclic(n: usize, cap: usize) -> Result<PermGroup> {
    let n = n.max(1);
    let gens = if n >= 2 { vec![cycle(n, 1..=n)] } else { vec![] };
    PermGroup::with_cap(n, gens, cap)
}

/// Dihedral group of the given (even) order, acting on order/2 points when
/// that action is faithful.
pub fn dihedral(order: usize, cap: usize) -> Result<PermGroup> {
    if order < 2 || order % 2 != 0 {
        return Err(Error::InvalidPermutation(format!(
            "dihedral group order must be even and positive, got {order}"
        )));
    }
    match order / 2 {
        1 => PermGroup::with_cap(2, vec![cycle(2, [1, 2])], cap),
        2 => PermGroup::with_cap(4, vec![cycle(4, [1, 2]), cycle(4, [3, 4])], cap),
        n => {
            let rotation = cycle(n, 1..=n);
            let reflection = Permutation::from_images((0..n as u32).rev().collect())?;
            PermGroup::with_cap(n, vec![rotation, reflection], cap)
        }
    }
}

/// Nonzero vectors of F₃², indexed 0..8.
fn f3_vectors() -> Vec<(u8, u8)> {
    (0..3u8)
        .flat_map(|a| (0..3u8).map(move |b| (a, b)))
        .filter(|&v| v != (0, 0))
        .collect()
}

/// The permutation induced by a 2×2 matrix over F₃ acting on column vectors.
fn matrix_action(m: [[u8; 2]; 2]) -> Permutation {
    let vs = f3_vectors();
    let images = vs
        .iter()
        .map(|&(x, y)| {
            let img = (
                (m[0][0] * x + m[0][1] * y) % 3,
                (m[1][0] * x + m[1][1] * y) % 3,
            );
            vs.iter().position(|&v| v == img).expect("invertible matrix") as u32
        })
        .collect();
    Permutation::from_images(images).expect("invertible matrix")
}

/// SL₂(F₃) acting on the 8 nonzero vectors of F₃².
pub fn sl2_3() -> PermGroup {
    let gens = vec![matrix_action([[1, 1], [0, 1]]), matrix_action([[1, 0], [1, 1]])];
    PermGroup::new(8, gens).expect("order 24")
}

/// GL₂(F₃) acting on the 8 nonzero vectors of F₃².
pub fn gl2_3() -> PermGroup {
    let gens = vec![
        matrix_action([[1, 1], [0, 1]]),
        matrix_action([[1, 0], [1, 1]]),
        matrix_action([[2, 0], [0, 1]]),
    ];
    PermGroup::new(8, gens).expect("order 48")
}

/// Weyl group of type B_n as signed permutations of ±1..±n; point `i` is
/// +(i+1) and point `i + n` is −(i+1).
pub fn weyl_b(n: usize, cap: usize) -> Result<PermGroup> {
    let n = n.max(1);
    let deg = 2 * n;
    let mut gens = vec![cycle(deg, [1, n + 1])];
    for i in 1..n {
        gens.push(
            Permutation::from_cycles(deg, &[vec![i, i + 1], vec![n + i, n + i + 1]])
                .expect("valid"),
        );
    }
    PermGroup::with_cap(deg, gens, cap)
}

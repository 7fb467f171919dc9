//! Fixture builders shared by the benchmarks.

use coronal_core::{IntMatrix, IntersectionMatrix, TwistWord};

/// Chain of n+m curves alternating between the two families: curve i
/// meets curve i+1 once. Connected for every split, so strict mode holds.
pub fn chain(n: usize, m: usize) -> IntersectionMatrix {
    let dim = n + m;
    let mut data = vec![0i64; dim * dim];
    // Family A holds the odd positions of the chain, family B the even
    // ones, so adjacency never lands inside a family block.
    let a: Vec<usize> = (0..dim).step_by(2).collect();
    let b: Vec<usize> = (1..dim).step_by(2).collect();
    let order: Vec<usize> = a.iter().chain(b.iter()).copied().collect();
    let mut position = vec![0usize; dim];
    for (row, &chain_slot) in order.iter().enumerate() {
        position[chain_slot] = row;
    }
    for slot in 0..dim - 1 {
        let (i, j) = (position[slot], position[slot + 1]);
        data[i * dim + j] = 1;
        data[j * dim + i] = 1;
    }
    IntersectionMatrix::new_strict(a.len(), b.len(), IntMatrix::from_i64(dim, dim, &data))
        .expect("chain layout is strict")
}

/// Word visiting every index round-robin until the length is reached.
pub fn round_robin_word(dim: usize, len: usize) -> TwistWord {
    assert!(len >= dim);
    TwistWord::new((0..len).map(|k| 1 + k % dim).collect())
}

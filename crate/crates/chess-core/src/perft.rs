use crate::position::Position;

/// Exhaustive legal-move-tree leaf count: the standard move-generator
/// correctness oracle.
pub fn perft(p: &Position, depth: u32) -> u64 {
    if depth == 0 {
        return 1;
    }
    let moves = p.legal_moves();
    if depth == 1 {
        return moves.len() as u64;
    }
    moves
        .iter()
        .map(|&m| perft(&p.apply_move_unchecked(m), depth - 1))
        .sum()
}

/// Perft with the root subtrees counted on the rayon thread pool. Exact same
/// count as [`perft`]; only the traversal order differs.
#[cfg(feature = "parallel")]
pub fn perft_parallel(p: &Position, depth: u32) -> u64 {
    use rayon::prelude::*;

    if depth < 2 {
        return perft(p, depth);
    }
    p.legal_moves()
        .par_iter()
        .map(|&m| perft(&p.apply_move_unchecked(m), depth - 1))
        .sum()
}

//! Exact chess rules with no engine heuristics attached.
//!
//! The crate provides a full-fidelity [`Position`] (placement, side to move,
//! castling rights, en-passant target, clocks), strictly legal move
//! generation, FEN and SAN/UCI codecs, terminal-state detection and a perft
//! oracle for validating the move generator.
//!
//! Positions and moves are immutable values; every operation here is pure,
//! so the types can be shared freely across worker threads.

mod fen;
mod movegen;
mod moves;
mod perft;
mod piece;
mod position;
mod san;
mod square;
mod uci;

pub use fen::{fen_core, format_fen, parse_fen, FenError};
pub use movegen::IllegalMoveError;
pub use moves::Move;
pub use perft::perft;
#[cfg(feature = "parallel")]
pub use perft::perft_parallel;
pub use piece::{Color, Piece, PieceKind};
pub use position::{CastlingRights, CastlingSide, Outcome, Position, PositionError};
pub use san::{format_san, parse_san, SanError};
pub use square::Square;
pub use uci::{format_uci_move, parse_uci_move, UciMoveError};

/// FEN of the standard starting position.
pub const START_FEN: &str = "rnbqkbnr/pppppppp/8/8/8/8/PPPPPPPP/RNBQKBNR w KQkq - 0 1";

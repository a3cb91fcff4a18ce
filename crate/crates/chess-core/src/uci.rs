use thiserror::Error;

use crate::moves::Move;
use crate::piece::PieceKind;
use crate::square::Square;

#[derive(Clone, PartialEq, Eq, Debug, Error)]
#[error("not a UCI move: {0}")]
pub struct UciMoveError(pub String);

/// Parses coordinate notation, 4 or 5 characters ("e2e4", "e7e8q").
pub fn parse_uci_move(text: &str) -> Result<Move, UciMoveError> {
    let err = || UciMoveError(text.to_string());
    if !(4..=5).contains(&text.len()) {
        return Err(err());
    }
    let from = Square::from_name(&text[0..2]).ok_or_else(err)?;
    let to = Square::from_name(&text[2..4]).ok_or_else(err)?;
    if from == to {
        return Err(err());
    }
    let promotion = match text.as_bytes().get(4) {
        None => None,
        Some(&c) => match c.to_ascii_lowercase() {
            b'q' => Some(PieceKind::Queen),
            b'r' => Some(PieceKind::Rook),
            b'b' => Some(PieceKind::Bishop),
            b'n' => Some(PieceKind::Knight),
            _ => return Err(err()),
        },
    };
    Ok(Move { from, to, promotion })
}

/// Coordinate notation of a move; promotions use a lowercase piece letter.
pub fn format_uci_move(m: Move) -> String {
    m.to_string()
}

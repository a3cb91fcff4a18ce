use thiserror::Error;

use crate::piece::{Color, Piece};
use crate::position::{CastlingRights, CastlingSide, Position, PositionError};
use crate::square::Square;

/// Errors raised while reading a six-field FEN string.
#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum FenError {
    #[error("expected 6 fields, found {0}")]
    FieldCount(usize),
    #[error("bad piece placement: {0}")]
    BadPlacement(String),
    #[error("bad side-to-move field: {0}")]
    BadSideToMove(String),
    #[error("bad castling field: {0}")]
    BadCastlingField(String),
    #[error("bad en-passant field: {0}")]
    BadEnPassantField(String),
    #[error("bad clock field: {0}")]
    BadClock(String),
    #[error(transparent)]
    Invalid(#[from] PositionError),
}

/// Parses a six-field FEN string into a validated [`Position`].
pub fn parse_fen(text: &str) -> Result<Position, FenError> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 6 {
        return Err(FenError::FieldCount(fields.len()));
    }

    let mut board = [None; 64];
    let ranks: Vec<&str> = fields[0].split('/').collect();
    if ranks.len() != 8 {
        return Err(FenError::BadPlacement(format!(
            "expected 8 ranks, found {}",
            ranks.len()
        )));
    }
    for (i, rank_text) in ranks.iter().enumerate() {
        let rank = 7 - i as u8; // FEN lists rank 8 first
        let mut file: u8 = 0;
        for c in rank_text.chars() {
            if let Some(skip) = c.to_digit(10) {
                if skip == 0 || skip > 8 {
                    return Err(FenError::BadPlacement(format!("bad skip digit '{c}'")));
                }
                file += skip as u8;
            } else {
                let piece = Piece::from_fen_char(c)
                    .ok_or_else(|| FenError::BadPlacement(format!("unknown piece '{c}'")))?;
                if file >= 8 {
                    return Err(FenError::BadPlacement(format!("rank overflow in '{rank_text}'")));
                }
                board[Square::new(file, rank).index()] = Some(piece);
                file += 1;
            }
            if file > 8 {
                return Err(FenError::BadPlacement(format!("rank overflow in '{rank_text}'")));
            }
        }
        if file != 8 {
            return Err(FenError::BadPlacement(format!("rank underflow in '{rank_text}'")));
        }
    }

    let side_to_move = match fields[1] {
        "w" => Color::White,
        "b" => Color::Black,
        other => return Err(FenError::BadSideToMove(other.to_string())),
    };

    let mut castling = CastlingRights::none();
    if fields[2] != "-" {
        for c in fields[2].chars() {
            let (color, side) = match c {
                'K' => (Color::White, CastlingSide::King),
                'Q' => (Color::White, CastlingSide::Queen),
                'k' => (Color::Black, CastlingSide::King),
                'q' => (Color::Black, CastlingSide::Queen),
                _ => return Err(FenError::BadCastlingField(fields[2].to_string())),
            };
            if castling.has(color, side) {
                return Err(FenError::BadCastlingField(fields[2].to_string()));
            }
            castling.set(color, side);
        }
    }

    let en_passant = match fields[3] {
        "-" => None,
        name => Some(
            Square::from_name(name)
                .ok_or_else(|| FenError::BadEnPassantField(name.to_string()))?,
        ),
    };

    let halfmove_clock: u32 = fields[4]
        .parse()
        .map_err(|_| FenError::BadClock(fields[4].to_string()))?;
    let fullmove_number: u32 = fields[5]
        .parse()
        .map_err(|_| FenError::BadClock(fields[5].to_string()))?;
    if fullmove_number == 0 {
        return Err(FenError::BadClock(fields[5].to_string()));
    }

    Ok(Position::from_parts(
        board,
        side_to_move,
        castling,
        en_passant,
        halfmove_clock,
        fullmove_number,
    )?)
}

/// Formats the canonical six-field FEN of a position.
pub fn format_fen(p: &Position) -> String {
    let mut out = String::with_capacity(80);
    for rank in (0..8).rev() {
        let mut empty = 0;
        for file in 0..8 {
            match p.piece_at(Square::new(file, rank)) {
                None => empty += 1,
                Some(piece) => {
                    if empty > 0 {
                        out.push(char::from_digit(empty, 10).unwrap());
                        empty = 0;
                    }
                    out.push(piece.fen_char());
                }
            }
        }
        if empty > 0 {
            out.push(char::from_digit(empty, 10).unwrap());
        }
        if rank > 0 {
            out.push('/');
        }
    }
    out.push(' ');
    out.push(match p.side_to_move() {
        Color::White => 'w',
        Color::Black => 'b',
    });
    out.push(' ');
    out.push_str(&p.castling().to_string());
    out.push(' ');
    match p.en_passant() {
        None => out.push('-'),
        Some(sq) => out.push_str(&sq.to_string()),
    }
    out.push_str(&format!(" {} {}", p.halfmove_clock(), p.fullmove_number()));
    out
}

/// First four FEN fields: placement, side to move, castling, en passant.
/// This is the clock-free identity used for position lookups.
pub fn fen_core(p: &Position) -> String {
    let fen = format_fen(p);
    let mut parts = fen.split(' ');
    let mut core = String::with_capacity(fen.len());
    for i in 0..4 {
        if i > 0 {
            core.push(' ');
        }
        core.push_str(parts.next().unwrap());
    }
    core
}

use std::fmt;

use thiserror::Error;

use crate::piece::{Color, Piece, PieceKind};
use crate::square::Square;

/// Which wing a castling right refers to.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum CastlingSide {
    King,
    Queen,
}

/// The four castling flags packed into one byte.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct CastlingRights(u8);

impl CastlingRights {
    const WHITE_KING: u8 = 1;
    const WHITE_QUEEN: u8 = 2;
    const BLACK_KING: u8 = 4;
    const BLACK_QUEEN: u8 = 8;

    pub fn none() -> CastlingRights {
        CastlingRights(0)
    }

    pub fn all() -> CastlingRights {
        CastlingRights(0b1111)
    }

    fn bit(color: Color, side: CastlingSide) -> u8 {
        match (color, side) {
            (Color::White, CastlingSide::King) => Self::WHITE_KING,
            (Color::White, CastlingSide::Queen) => Self::WHITE_QUEEN,
            (Color::Black, CastlingSide::King) => Self::BLACK_KING,
            (Color::Black, CastlingSide::Queen) => Self::BLACK_QUEEN,
        }
    }

    pub fn has(self, color: Color, side: CastlingSide) -> bool {
        self.0 & Self::bit(color, side) != 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn set(&mut self, color: Color, side: CastlingSide) {
        self.0 |= Self::bit(color, side);
    }

    pub fn clear(&mut self, color: Color, side: CastlingSide) {
        self.0 &= !Self::bit(color, side);
    }

    pub fn clear_color(&mut self, color: Color) {
        self.clear(color, CastlingSide::King);
        self.clear(color, CastlingSide::Queen);
    }
}

impl fmt::Display for CastlingRights {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("-");
        }
        for (flag, c) in [
            (Self::WHITE_KING, 'K'),
            (Self::WHITE_QUEEN, 'Q'),
            (Self::BLACK_KING, 'k'),
            (Self::BLACK_QUEEN, 'q'),
        ] {
            if self.0 & flag != 0 {
                write!(f, "{c}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for CastlingRights {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CastlingRights({self})")
    }
}

/// Violation of a structural position invariant.
#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum PositionError {
    #[error("{0} has no king")]
    NoKing(Color),
    #[error("{0} has more than one king")]
    TooManyKings(Color),
    #[error("pawn on back rank")]
    PawnOnBackRank,
    #[error("side not to move is in check")]
    OppositeKingInCheck,
    #[error("en passant square inconsistent with board")]
    BadEnPassant,
    #[error("castling rights without king and rook on home squares")]
    BadCastling,
}

/// Game-theoretic status of a position, ignoring move history.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Outcome {
    Ongoing,
    Checkmate { winner: Color },
    Stalemate,
    InsufficientMaterial,
}

impl Outcome {
    pub fn is_terminal(self) -> bool {
        self != Outcome::Ongoing
    }
}

/// A complete chess state: piece placement, side to move, castling rights,
/// en-passant target and move clocks.
///
/// Instances constructed through [`Position::from_parts`], FEN parsing or
/// [`Position::apply_move`](crate::Position::apply_move) always satisfy the
/// structural invariants (one king per side, no pawns on back ranks, the side
/// not to move is not in check, en-passant and castling fields consistent
/// with the placement).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Position {
    pub(crate) board: [Option<Piece>; 64],
    pub(crate) side_to_move: Color,
    pub(crate) castling: CastlingRights,
    pub(crate) en_passant: Option<Square>,
    pub(crate) halfmove_clock: u32,
    pub(crate) fullmove_number: u32,
}

impl Position {
    /// The standard starting position.
    pub fn initial() -> Position {
        let mut board = [None; 64];
        let back = [
            PieceKind::Rook,
            PieceKind::Knight,
            PieceKind::Bishop,
            PieceKind::Queen,
            PieceKind::King,
            PieceKind::Bishop,
            PieceKind::Knight,
            PieceKind::Rook,
        ];
        for (file, &kind) in back.iter().enumerate() {
            let file = file as u8;
            board[Square::new(file, 0).index()] = Some(Piece::new(Color::White, kind));
            board[Square::new(file, 1).index()] = Some(Piece::new(Color::White, PieceKind::Pawn));
            board[Square::new(file, 6).index()] = Some(Piece::new(Color::Black, PieceKind::Pawn));
            board[Square::new(file, 7).index()] = Some(Piece::new(Color::Black, kind));
        }
        Position {
            board,
            side_to_move: Color::White,
            castling: CastlingRights::all(),
            en_passant: None,
            halfmove_clock: 0,
            fullmove_number: 1,
        }
    }

    /// Assembles a position from raw parts, validating every invariant.
    pub fn from_parts(
        board: [Option<Piece>; 64],
        side_to_move: Color,
        castling: CastlingRights,
        en_passant: Option<Square>,
        halfmove_clock: u32,
        fullmove_number: u32,
    ) -> Result<Position, PositionError> {
        let position = Position {
            board,
            side_to_move,
            castling,
            en_passant,
            halfmove_clock,
            fullmove_number,
        };
        position.validate()?;
        Ok(position)
    }

    fn validate(&self) -> Result<(), PositionError> {
        for color in [Color::White, Color::Black] {
            let kings = self.squares_with(color, PieceKind::King).count();
            match kings {
                0 => return Err(PositionError::NoKing(color)),
                1 => {}
                _ => return Err(PositionError::TooManyKings(color)),
            }
        }
        for sq in Square::all() {
            if let Some(p) = self.piece_at(sq) {
                if p.kind == PieceKind::Pawn && (sq.rank() == 0 || sq.rank() == 7) {
                    return Err(PositionError::PawnOnBackRank);
                }
            }
        }
        if self.in_check(self.side_to_move.opponent()) {
            return Err(PositionError::OppositeKingInCheck);
        }
        if let Some(ep) = self.en_passant {
            // The ep target sits behind a pawn that just double-pushed, so the
            // target square and the push origin must be empty and the pawn of
            // the side that moved last must stand in front of the target.
            let moved = self.side_to_move.opponent();
            let expected_rank = match moved {
                Color::White => 2,
                Color::Black => 5,
            };
            if ep.rank() != expected_rank {
                return Err(PositionError::BadEnPassant);
            }
            let pawn_sq = ep.offset(0, moved.forward()).ok_or(PositionError::BadEnPassant)?;
            let origin_sq = ep.offset(0, -moved.forward()).ok_or(PositionError::BadEnPassant)?;
            if self.piece_at(pawn_sq) != Some(Piece::new(moved, PieceKind::Pawn))
                || self.piece_at(ep).is_some()
                || self.piece_at(origin_sq).is_some()
            {
                return Err(PositionError::BadEnPassant);
            }
        }
        for color in [Color::White, Color::Black] {
            let home_rank = match color {
                Color::White => 0,
                Color::Black => 7,
            };
            let king_home = self.piece_at(Square::new(4, home_rank))
                == Some(Piece::new(color, PieceKind::King));
            for (side, rook_file) in [(CastlingSide::King, 7), (CastlingSide::Queen, 0)] {
                if self.castling.has(color, side) {
                    let rook_home = self.piece_at(Square::new(rook_file, home_rank))
                        == Some(Piece::new(color, PieceKind::Rook));
                    if !king_home || !rook_home {
                        return Err(PositionError::BadCastling);
                    }
                }
            }
        }
        Ok(())
    }

    pub fn piece_at(&self, sq: Square) -> Option<Piece> {
        self.board[sq.index()]
    }

    pub fn side_to_move(&self) -> Color {
        self.side_to_move
    }

    pub fn castling(&self) -> CastlingRights {
        self.castling
    }

    pub fn en_passant(&self) -> Option<Square> {
        self.en_passant
    }

    pub fn halfmove_clock(&self) -> u32 {
        self.halfmove_clock
    }

    pub fn fullmove_number(&self) -> u32 {
        self.fullmove_number
    }

    pub(crate) fn squares_with(
        &self,
        color: Color,
        kind: PieceKind,
    ) -> impl Iterator<Item = Square> + '_ {
        Square::all().filter(move |&sq| self.piece_at(sq) == Some(Piece::new(color, kind)))
    }

    pub(crate) fn king_square(&self, color: Color) -> Option<Square> {
        self.squares_with(color, PieceKind::King).next()
    }

    /// True when `target` is attacked by any piece of `by`.
    pub fn is_attacked(&self, target: Square, by: Color) -> bool {
        // Pawns attack diagonally forward, so look one rank backwards.
        for df in [-1, 1] {
            if let Some(sq) = target.offset(df, -by.forward()) {
                if self.piece_at(sq) == Some(Piece::new(by, PieceKind::Pawn)) {
                    return true;
                }
            }
        }
        const KNIGHT_STEPS: [(i8, i8); 8] = [
            (1, 2), (2, 1), (2, -1), (1, -2), (-1, -2), (-2, -1), (-2, 1), (-1, 2),
        ];
        for (df, dr) in KNIGHT_STEPS {
            if let Some(sq) = target.offset(df, dr) {
                if self.piece_at(sq) == Some(Piece::new(by, PieceKind::Knight)) {
                    return true;
                }
            }
        }
        const KING_STEPS: [(i8, i8); 8] = [
            (1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1),
        ];
        for (df, dr) in KING_STEPS {
            if let Some(sq) = target.offset(df, dr) {
                if self.piece_at(sq) == Some(Piece::new(by, PieceKind::King)) {
                    return true;
                }
            }
        }
        const ORTHO: [(i8, i8); 4] = [(1, 0), (-1, 0), (0, 1), (0, -1)];
        const DIAG: [(i8, i8); 4] = [(1, 1), (1, -1), (-1, 1), (-1, -1)];
        for (dirs, slider) in [(ORTHO, PieceKind::Rook), (DIAG, PieceKind::Bishop)] {
            for (df, dr) in dirs {
                let mut sq = target;
                while let Some(next) = sq.offset(df, dr) {
                    sq = next;
                    match self.piece_at(sq) {
                        None => continue,
                        Some(p) => {
                            if p.color == by && (p.kind == slider || p.kind == PieceKind::Queen) {
                                return true;
                            }
                            break;
                        }
                    }
                }
            }
        }
        false
    }

    /// True when the king of `color` is attacked.
    pub fn in_check(&self, color: Color) -> bool {
        match self.king_square(color) {
            Some(sq) => self.is_attacked(sq, color.opponent()),
            None => false,
        }
    }

    /// Terminal-state classification. Draw rules that need game history
    /// (repetition, fifty moves) are out of scope: single positions are
    /// evaluated in isolation.
    pub fn outcome(&self) -> Outcome {
        if self.legal_moves().is_empty() {
            return if self.in_check(self.side_to_move) {
                Outcome::Checkmate {
                    winner: self.side_to_move.opponent(),
                }
            } else {
                Outcome::Stalemate
            };
        }
        if self.insufficient_material() {
            Outcome::InsufficientMaterial
        } else {
            Outcome::Ongoing
        }
    }

    fn insufficient_material(&self) -> bool {
        let mut minors = Vec::new();
        for sq in Square::all() {
            match self.piece_at(sq) {
                None => {}
                Some(p) => match p.kind {
                    PieceKind::King => {}
                    PieceKind::Pawn | PieceKind::Rook | PieceKind::Queen => return false,
                    PieceKind::Bishop | PieceKind::Knight => minors.push((p.kind, sq)),
                },
            }
        }
        match minors.len() {
            0 | 1 => true,
            // Any number of bishops all standing on one square color cannot
            // deliver mate; knights keep mating chances alive.
            _ => {
                minors.iter().all(|(kind, _)| *kind == PieceKind::Bishop) && {
                    let shade = |sq: Square| (sq.file() + sq.rank()) % 2;
                    let first = shade(minors[0].1);
                    minors.iter().all(|(_, sq)| shade(*sq) == first)
                }
            }
        }
    }

    /// Piece counts as (white, black, total).
    pub fn count_pieces(&self) -> (u32, u32, u32) {
        let mut white = 0;
        let mut black = 0;
        for sq in Square::all() {
            match self.piece_at(sq) {
                Some(Piece { color: Color::White, .. }) => white += 1,
                Some(Piece { color: Color::Black, .. }) => black += 1,
                None => {}
            }
        }
        (white, black, white + black)
    }

    /// True when the en-passant field is set and an en-passant capture is
    /// actually legal for the side to move. Transposition-aware position
    /// keying needs this distinction: FEN records the target square after
    /// every double push, capturable or not.
    pub fn has_legal_en_passant(&self) -> bool {
        match self.en_passant {
            None => false,
            Some(ep) => self
                .legal_moves()
                .iter()
                .any(|m| m.to == ep && self.piece_at(m.from).map(|p| p.kind) == Some(PieceKind::Pawn)),
        }
    }
}

impl fmt::Debug for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Position({})", crate::fen::format_fen(self))
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::fen::format_fen(self))
    }
}

use thiserror::Error;

use crate::moves::Move;
use crate::piece::{Color, Piece, PieceKind};
use crate::position::{CastlingSide, Position};
use crate::square::Square;

#[derive(Clone, PartialEq, Eq, Debug, Error)]
#[error("move {mv} is not legal in {fen}")]
pub struct IllegalMoveError {
    pub mv: String,
    pub fen: String,
}

const KNIGHT_STEPS: [(i8, i8); 8] = [
    (1, 2), (2, 1), (2, -1), (1, -2), (-1, -2), (-2, -1), (-2, 1), (-1, 2),
];
const KING_STEPS: [(i8, i8); 8] = [
    (1, 0), (1, 1), (0, 1), (-1, 1), (-1, 0), (-1, -1), (0, -1), (1, -1),
];
const BISHOP_DIRS: [(i8, i8); 4] = [(1, 1), (1, -1), (-1, 1), (-1, -1)];
const ROOK_DIRS: [(i8, i8); 4] = [(1, 0), (-1, 0), (0, 1), (0, -1)];

impl Position {
    /// Complete, duplicate-free set of strictly legal moves. Terminal
    /// positions yield an empty list.
    pub fn legal_moves(&self) -> Vec<Move> {
        let us = self.side_to_move;
        self.pseudo_legal_moves()
            .into_iter()
            .filter(|&m| !self.apply_move_unchecked(m).in_check(us))
            .collect()
    }

    pub fn is_legal(&self, m: Move) -> bool {
        self.legal_moves().contains(&m)
    }

    /// Applies a legal move, updating clocks, castling rights and the
    /// en-passant target per FIDE rules.
    pub fn apply_move(&self, m: Move) -> Result<Position, IllegalMoveError> {
        if !self.is_legal(m) {
            return Err(IllegalMoveError {
                mv: m.to_string(),
                fen: crate::fen::format_fen(self),
            });
        }
        Ok(self.apply_move_unchecked(m))
    }

    /// Applies a move without the legality check. The caller must pass a
    /// move obtained from [`Position::legal_moves`]; anything else produces
    /// an inconsistent position.
    pub fn apply_move_unchecked(&self, m: Move) -> Position {
        let us = self.side_to_move;
        let mut board = self.board;
        let moving = board[m.from.index()].expect("apply_move_unchecked: empty origin");
        let captured = board[m.to.index()];
        let mut is_capture = captured.is_some();

        if moving.kind == PieceKind::Pawn
            && Some(m.to) == self.en_passant
            && captured.is_none()
            && m.from.file() != m.to.file()
        {
            board[Square::new(m.to.file(), m.from.rank()).index()] = None;
            is_capture = true;
        }

        board[m.from.index()] = None;
        board[m.to.index()] = Some(match m.promotion {
            Some(kind) => Piece::new(us, kind),
            None => moving,
        });

        // Castling: relocate the rook alongside the two-square king move.
        if moving.kind == PieceKind::King && m.from.file() == 4 && m.to.file().abs_diff(m.from.file()) == 2 {
            let rank = m.from.rank();
            let (rook_from, rook_to) = if m.to.file() == 6 {
                (Square::new(7, rank), Square::new(5, rank))
            } else {
                (Square::new(0, rank), Square::new(3, rank))
            };
            board[rook_to.index()] = board[rook_from.index()].take();
        }

        let mut castling = self.castling;
        if moving.kind == PieceKind::King {
            castling.clear_color(us);
        }
        for (color, rank) in [(Color::White, 0u8), (Color::Black, 7u8)] {
            for (side, file) in [(CastlingSide::King, 7u8), (CastlingSide::Queen, 0u8)] {
                let corner = Square::new(file, rank);
                if m.from == corner || m.to == corner {
                    castling.clear(color, side);
                }
            }
        }

        let en_passant = if moving.kind == PieceKind::Pawn
            && m.to.rank().abs_diff(m.from.rank()) == 2
        {
            Some(Square::new(m.from.file(), (m.from.rank() + m.to.rank()) / 2))
        } else {
            None
        };

        let halfmove_clock = if moving.kind == PieceKind::Pawn || is_capture {
            0
        } else {
            self.halfmove_clock + 1
        };
        let fullmove_number = match us {
            Color::Black => self.fullmove_number + 1,
            Color::White => self.fullmove_number,
        };

        Position {
            board,
            side_to_move: us.opponent(),
            castling,
            en_passant,
            halfmove_clock,
            fullmove_number,
        }
    }

    fn pseudo_legal_moves(&self) -> Vec<Move> {
        let us = self.side_to_move;
        let mut out = Vec::with_capacity(48);
        for from in Square::all() {
            let piece = match self.piece_at(from) {
                Some(p) if p.color == us => p,
                _ => continue,
            };
            match piece.kind {
                PieceKind::Pawn => self.pawn_moves(from, us, &mut out),
                PieceKind::Knight => self.step_moves(from, us, &KNIGHT_STEPS, &mut out),
                PieceKind::King => {
                    self.step_moves(from, us, &KING_STEPS, &mut out);
                    self.castling_moves(from, us, &mut out);
                }
                PieceKind::Bishop => self.slider_moves(from, us, &BISHOP_DIRS, &mut out),
                PieceKind::Rook => self.slider_moves(from, us, &ROOK_DIRS, &mut out),
                PieceKind::Queen => {
                    self.slider_moves(from, us, &BISHOP_DIRS, &mut out);
                    self.slider_moves(from, us, &ROOK_DIRS, &mut out);
                }
            }
        }
        out
    }

    fn pawn_moves(&self, from: Square, us: Color, out: &mut Vec<Move>) {
        let dir = us.forward();
        let start_rank = match us {
            Color::White => 1,
            Color::Black => 6,
        };
        let promo_rank = match us {
            Color::White => 7,
            Color::Black => 0,
        };
        let push_pawn = |to: Square, out: &mut Vec<Move>| {
            if to.rank() == promo_rank {
                for kind in [PieceKind::Queen, PieceKind::Rook, PieceKind::Bishop, PieceKind::Knight] {
                    out.push(Move::promoting(from, to, kind));
                }
            } else {
                out.push(Move::new(from, to));
            }
        };
        if let Some(single) = from.offset(0, dir) {
            if self.piece_at(single).is_none() {
                push_pawn(single, out);
                if from.rank() == start_rank {
                    let double = from.offset(0, 2 * dir).expect("double push stays on board");
                    if self.piece_at(double).is_none() {
                        out.push(Move::new(from, double));
                    }
                }
            }
        }
        for df in [-1, 1] {
            if let Some(to) = from.offset(df, dir) {
                match self.piece_at(to) {
                    Some(p) if p.color != us => push_pawn(to, out),
                    None if Some(to) == self.en_passant() => out.push(Move::new(from, to)),
                    _ => {}
                }
            }
        }
    }

    fn step_moves(&self, from: Square, us: Color, steps: &[(i8, i8)], out: &mut Vec<Move>) {
        for &(df, dr) in steps {
            if let Some(to) = from.offset(df, dr) {
                match self.piece_at(to) {
                    Some(p) if p.color == us => {}
                    _ => out.push(Move::new(from, to)),
                }
            }
        }
    }

    fn slider_moves(&self, from: Square, us: Color, dirs: &[(i8, i8)], out: &mut Vec<Move>) {
        for &(df, dr) in dirs {
            let mut sq = from;
            while let Some(to) = sq.offset(df, dr) {
                sq = to;
                match self.piece_at(to) {
                    None => out.push(Move::new(from, to)),
                    Some(p) => {
                        if p.color != us {
                            out.push(Move::new(from, to));
                        }
                        break;
                    }
                }
            }
        }
    }

    fn castling_moves(&self, from: Square, us: Color, out: &mut Vec<Move>) {
        let home_rank = match us {
            Color::White => 0,
            Color::Black => 7,
        };
        if from != Square::new(4, home_rank) || self.in_check(us) {
            return;
        }
        let them = us.opponent();
        // King side: f and g files empty, king does not cross an attacked
        // square. The landing square is re-checked by the legality filter.
        if self.castling().has(us, CastlingSide::King) {
            let f = Square::new(5, home_rank);
            let g = Square::new(6, home_rank);
            if self.piece_at(f).is_none()
                && self.piece_at(g).is_none()
                && !self.is_attacked(f, them)
            {
                out.push(Move::new(from, g));
            }
        }
        // Queen side: b, c and d files empty; the king crosses d.
        if self.castling().has(us, CastlingSide::Queen) {
            let b = Square::new(1, home_rank);
            let c = Square::new(2, home_rank);
            let d = Square::new(3, home_rank);
            if self.piece_at(b).is_none()
                && self.piece_at(c).is_none()
                && self.piece_at(d).is_none()
                && !self.is_attacked(d, them)
            {
                out.push(Move::new(from, c));
            }
        }
    }
}

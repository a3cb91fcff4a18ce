use thiserror::Error;

use crate::movegen::IllegalMoveError;
use crate::moves::Move;
use crate::piece::PieceKind;
use crate::position::Position;
use crate::square::Square;

/// Why a SAN token failed to resolve to a move. All three count as an
/// illegal candidate downstream; the distinction is kept for reporting.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Error)]
pub enum SanError {
    #[error("not a SAN token")]
    Unparseable,
    #[error("token matches more than one legal move")]
    Ambiguous,
    #[error("token matches no legal move")]
    NoMatch,
}

struct SanPattern {
    kind: PieceKind,
    from_file: Option<u8>,
    from_rank: Option<u8>,
    to: Option<Square>,
    promotion: Option<PieceKind>,
    castle_file: Option<u8>, // king destination file for castling tokens
}

impl Default for SanPattern {
    fn default() -> Self {
        SanPattern {
            kind: PieceKind::Pawn,
            from_file: None,
            from_rank: None,
            to: None,
            promotion: None,
            castle_file: None,
        }
    }
}

/// Resolves a SAN token against the legal moves of `p`.
///
/// Decorations are tolerated: trailing `+`, `#`, `!`, `?`, the `x` capture
/// marker, castling spelled with digits (`0-0`) and promotions written
/// without `=` (`e8Q`). The token must still denote exactly one legal move.
pub fn parse_san(p: &Position, text: &str) -> Result<Move, SanError> {
    let pattern = scan_token(text).ok_or(SanError::Unparseable)?;
    let legal = p.legal_moves();
    let matches: Vec<Move> = legal
        .into_iter()
        .filter(|m| pattern_matches(p, &pattern, *m))
        .collect();
    match matches.len() {
        0 => Err(SanError::NoMatch),
        1 => Ok(matches[0]),
        _ => Err(SanError::Ambiguous),
    }
}

fn scan_token(text: &str) -> Option<SanPattern> {
    let stripped: &str = text.trim().trim_end_matches(['+', '#', '!', '?']);
    if stripped.is_empty() {
        return None;
    }

    match stripped {
        "O-O" | "0-0" | "o-o" => {
            return Some(SanPattern {
                kind: PieceKind::King,
                castle_file: Some(6),
                ..SanPattern::default()
            })
        }
        "O-O-O" | "0-0-0" | "o-o-o" => {
            return Some(SanPattern {
                kind: PieceKind::King,
                castle_file: Some(2),
                ..SanPattern::default()
            })
        }
        _ => {}
    }

    let mut chars: Vec<char> = stripped.chars().collect();

    // Promotion suffix: "=Q" or bare "Q" directly after the target square.
    let mut promotion = None;
    if chars.len() >= 3 {
        let last = *chars.last().unwrap();
        if let Some(kind) = promo_kind(last) {
            let before = chars[chars.len() - 2];
            if before == '=' {
                promotion = Some(kind);
                chars.truncate(chars.len() - 2);
            } else if before.is_ascii_digit() {
                promotion = Some(kind);
                chars.truncate(chars.len() - 1);
            }
        }
    }

    if chars.len() < 2 {
        return None;
    }
    let rank_char = chars.pop().unwrap();
    let file_char = chars.pop().unwrap();
    if !('a'..='h').contains(&file_char) || !('1'..='8').contains(&rank_char) {
        return None;
    }
    let to = Square::new(file_char as u8 - b'a', rank_char as u8 - b'1');

    let mut pattern = SanPattern {
        to: Some(to),
        promotion,
        ..SanPattern::default()
    };

    // Leading piece letter (uppercase only: a lowercase 'b' is a file).
    let mut rest = &chars[..];
    if let Some(&first) = rest.first() {
        if first.is_ascii_uppercase() {
            pattern.kind = PieceKind::from_letter(first)?;
            if pattern.kind == PieceKind::Pawn {
                return None; // "P" prefixes are not SAN
            }
            rest = &rest[1..];
        }
    }
    for &c in rest {
        match c {
            'a'..='h' if pattern.from_file.is_none() && pattern.from_rank.is_none() => {
                pattern.from_file = Some(c as u8 - b'a')
            }
            '1'..='8' if pattern.from_rank.is_none() => pattern.from_rank = Some(c as u8 - b'1'),
            'x' => {} // capture marker carries no matching information here
            _ => return None,
        }
    }
    Some(pattern)
}

fn promo_kind(c: char) -> Option<PieceKind> {
    // A lowercase 'b' cannot be a file letter here: promotion characters are
    // only consulted directly after the target square.
    match c {
        'Q' | 'q' => Some(PieceKind::Queen),
        'R' | 'r' => Some(PieceKind::Rook),
        'B' | 'b' => Some(PieceKind::Bishop),
        'N' | 'n' => Some(PieceKind::Knight),
        _ => None,
    }
}

fn pattern_matches(p: &Position, pattern: &SanPattern, m: Move) -> bool {
    let piece = match p.piece_at(m.from) {
        Some(piece) => piece,
        None => return false,
    };
    if piece.kind != pattern.kind {
        return false;
    }
    if let Some(castle_file) = pattern.castle_file {
        return m.from.file() == 4
            && m.to.file() == castle_file
            && m.to.file().abs_diff(m.from.file()) == 2
            && m.to.rank() == m.from.rank();
    }
    pattern.to == Some(m.to)
        && pattern.promotion == m.promotion
        && pattern.from_file.is_none_or(|f| m.from.file() == f)
        && pattern.from_rank.is_none_or(|r| m.from.rank() == r)
}

/// Canonical SAN for a legal move: minimal disambiguation, `x` on captures,
/// `=` promotions, `O-O`/`O-O-O` castling and a `+`/`#` suffix.
pub fn format_san(p: &Position, m: Move) -> Result<String, IllegalMoveError> {
    if !p.is_legal(m) {
        return Err(IllegalMoveError {
            mv: m.to_string(),
            fen: crate::fen::format_fen(p),
        });
    }
    let piece = p.piece_at(m.from).expect("legal move has a mover");
    let mut san = String::new();

    let is_castle = piece.kind == PieceKind::King && m.to.file().abs_diff(m.from.file()) == 2;
    if is_castle {
        san.push_str(if m.to.file() == 6 { "O-O" } else { "O-O-O" });
    } else {
        let is_capture = p.piece_at(m.to).is_some()
            || (piece.kind == PieceKind::Pawn && Some(m.to) == p.en_passant());
        if piece.kind == PieceKind::Pawn {
            if is_capture {
                san.push((b'a' + m.from.file()) as char);
                san.push('x');
            }
        } else {
            san.push(piece.kind.letter());
            san.push_str(&disambiguation(p, m, piece.kind));
            if is_capture {
                san.push('x');
            }
        }
        san.push_str(&m.to.to_string());
        if let Some(kind) = m.promotion {
            san.push('=');
            san.push(kind.letter());
        }
    }

    let next = p.apply_move_unchecked(m);
    if next.in_check(next.side_to_move()) {
        san.push(if next.legal_moves().is_empty() { '#' } else { '+' });
    }
    Ok(san)
}

fn disambiguation(p: &Position, m: Move, kind: PieceKind) -> String {
    let rivals: Vec<Move> = p
        .legal_moves()
        .into_iter()
        .filter(|other| {
            other.to == m.to
                && other.from != m.from
                && p.piece_at(other.from).map(|pc| pc.kind) == Some(kind)
        })
        .collect();
    if rivals.is_empty() {
        return String::new();
    }
    let file_unique = rivals.iter().all(|o| o.from.file() != m.from.file());
    let rank_unique = rivals.iter().all(|o| o.from.rank() != m.from.rank());
    if file_unique {
        ((b'a' + m.from.file()) as char).to_string()
    } else if rank_unique {
        ((b'1' + m.from.rank()) as char).to_string()
    } else {
        m.from.to_string()
    }
}

//! Lexer and precedence-climbing parser shared by all notations.
//!
//! Binding strength, tightest first: negation, conjunction, disjunction,
//! implication, equivalence. Implication and equivalence associate to the
//! right; conjunction and disjunction nest to the left.

use crate::connective::Connective;
use crate::formula::{Formula, VariableName};

use super::symbols::{self, foreign_owner, starts_with, Sym, MACRON};
use super::{NotationId, ParseDiagnostic, SyntaxConfig};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Sym(Sym),
    Ident(String),
    Open(char),
    Close(char),
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    /// Character offset into the original input.
    pos: usize,
    text: String,
}

/// Splits precomposed macron letters (`ā`) into letter + combining macron,
/// keeping original character offsets.
fn decompose(text: &str) -> Vec<(char, usize)> {
    let mut out = Vec::with_capacity(text.len());
    for (pos, c) in text.chars().enumerate() {
        let base = match c {
            'ā' => Some('a'),
            'ē' => Some('e'),
            'ī' => Some('i'),
            'ō' => Some('o'),
            'ū' => Some('u'),
            'ȳ' => Some('y'),
            'Ā' => Some('A'),
            'Ē' => Some('E'),
            'Ī' => Some('I'),
            'Ō' => Some('O'),
            'Ū' => Some('U'),
            'Ȳ' => Some('Y'),
            _ => None,
        };
        match base {
            Some(b) => {
                out.push((b, pos));
                out.push((MACRON, pos));
            }
            None => out.push((c, pos)),
        }
    }
    out
}

fn closing(open: char) -> char {
    match open {
        '(' => ')',
        '[' => ']',
        _ => '}',
    }
}

fn lex(text: &str, notation: NotationId) -> Result<Vec<Token>, ParseDiagnostic> {
    let chars = decompose(text);
    let plain: Vec<char> = chars.iter().map(|(c, _)| *c).collect();
    let table = symbols::table(notation);
    let mut tokens = Vec::new();
    let mut i = 0;
    while i < plain.len() {
        let c = plain[i];
        let pos = chars[i].1;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        if matches!(c, '(' | '[' | '{') {
            tokens.push(Token { tok: Tok::Open(c), pos, text: c.to_string() });
            i += 1;
            continue;
        }
        if matches!(c, ')' | ']' | '}') {
            tokens.push(Token { tok: Tok::Close(c), pos, text: c.to_string() });
            i += 1;
            continue;
        }
        if c.is_ascii_alphabetic() {
            let start = i;
            while i < plain.len() && (plain[i].is_ascii_alphanumeric() || plain[i] == '_') {
                i += 1;
            }
            let word: String = plain[start..i].iter().collect();
            let tok = match table.reserved.iter().find(|(w, _)| *w == word) {
                Some((_, v)) => Tok::Sym(Sym::Constant(*v)),
                None => Tok::Ident(word.clone()),
            };
            tokens.push(Token { tok, pos, text: word });
            continue;
        }
        let rest = &plain[i..];
        let found = table
            .lexemes
            .iter()
            .filter(|(lex, _)| starts_with(rest, lex))
            .max_by_key(|(lex, _)| lex.chars().count());
        if let Some((lex, sym)) = found {
            tokens.push(Token { tok: Tok::Sym(*sym), pos, text: lex.to_string() });
            i += lex.chars().count();
            continue;
        }
        let expected = vec!["variable".to_string(), "operator".to_string(), "parenthesis".to_string()];
        return Err(match foreign_owner(rest, notation) {
            Some((owner, lex)) => ParseDiagnostic::new(
                pos,
                format!("symbol `{lex}` belongs to the {owner} notation, not {notation}"),
                expected,
            ),
            None => ParseDiagnostic::new(pos, format!("unknown symbol `{c}`"), expected),
        });
    }
    Ok(tokens)
}

fn binding(c: Connective) -> (u8, bool) {
    // (strength, right-associative)
    match c {
        Connective::EQUIVALENCE => (1, true),
        Connective::IMPLICATION => (2, true),
        Connective::DISJUNCTION => (3, false),
        Connective::CONJUNCTION => (4, false),
        _ => unreachable!("no infix symbol for {c}"),
    }
}

struct Parser {
    tokens: Vec<Token>,
    at: usize,
    end: usize,
    config: SyntaxConfig,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.at)
    }

    fn operand_expected(&self) -> Vec<String> {
        let mut v = vec!["variable".to_string(), "constant".to_string(), "`(`".to_string()];
        if symbols::table(self.config.notation).lexemes.iter().any(|(_, s)| *s == Sym::NotPrefix) {
            v.push("negation".to_string());
        }
        v
    }

    fn expr(&mut self, min: u8) -> Result<Formula, ParseDiagnostic> {
        let mut lhs = self.unary()?;
        while let Some(Token { tok: Tok::Sym(Sym::Binary(c)), .. }) = self.peek() {
            let c = *c;
            let (strength, right) = binding(c);
            if strength < min {
                break;
            }
            let op = self.tokens[self.at].clone();
            self.at += 1;
            if self.peek().is_none() {
                return Err(ParseDiagnostic::new(
                    self.end,
                    format!("dangling operator `{}`: expected an operand after it", op.text),
                    self.operand_expected(),
                ));
            }
            let rhs = self.expr(if right { strength } else { strength + 1 })?;
            lhs = Formula::binary(c, lhs, rhs);
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Formula, ParseDiagnostic> {
        if let Some(Token { tok: Tok::Sym(Sym::NotPrefix), text, .. }) = self.peek() {
            let text = text.clone();
            self.at += 1;
            if self.peek().is_none() {
                return Err(ParseDiagnostic::new(
                    self.end,
                    format!("dangling operator `{text}`: expected an operand after it"),
                    self.operand_expected(),
                ));
            }
            return Ok(Formula::not(self.unary()?));
        }
        let mut f = self.primary()?;
        while let Some(Token { tok: Tok::Sym(Sym::NotPostfix), .. }) = self.peek() {
            self.at += 1;
            f = Formula::not(f);
        }
        Ok(f)
    }

    fn primary(&mut self) -> Result<Formula, ParseDiagnostic> {
        let Some(token) = self.peek().cloned() else {
            return Err(ParseDiagnostic::new(self.end, "unexpected end of input", self.operand_expected()));
        };
        self.at += 1;
        match token.tok {
            Tok::Ident(name) => Ok(Formula::variable(VariableName::new(name).map_err(|_| {
                ParseDiagnostic::new(token.pos, "invalid variable name", vec!["variable".into()])
            })?)),
            Tok::Sym(Sym::Constant(v)) => Ok(Formula::constant(v)),
            Tok::Open(open) => {
                let inner = self.expr(0)?;
                match self.peek() {
                    Some(Token { tok: Tok::Close(c), .. }) if *c == closing(open) => {
                        self.at += 1;
                        Ok(inner)
                    }
                    Some(Token { tok: Tok::Close(c), pos, .. }) => Err(ParseDiagnostic::new(
                        *pos,
                        format!("mismatched `{c}`: `{open}` opened at {} needs `{}`", token.pos, closing(open)),
                        vec![format!("`{}`", closing(open))],
                    )),
                    Some(t) => Err(self.juxtaposition(t.clone())),
                    None => Err(ParseDiagnostic::new(
                        self.end,
                        format!("unbalanced parentheses: `{open}` opened at {} is never closed", token.pos),
                        vec![format!("`{}`", closing(open)), "operator".into()],
                    )),
                }
            }
            Tok::Close(c) => Err(ParseDiagnostic::new(
                token.pos,
                format!("unbalanced parentheses: unexpected `{c}`"),
                self.operand_expected(),
            )),
            Tok::Sym(Sym::Binary(_)) => Err(ParseDiagnostic::new(
                token.pos,
                format!("dangling operator `{}`: expected an operand before it", token.text),
                self.operand_expected(),
            )),
            Tok::Sym(Sym::NotPostfix) => Err(ParseDiagnostic::new(
                token.pos,
                format!("postfix negation `{}` has nothing to negate", token.text),
                self.operand_expected(),
            )),
            Tok::Sym(Sym::NotPrefix) => unreachable!("handled in unary"),
        }
    }

    fn juxtaposition(&self, t: Token) -> ParseDiagnostic {
        match t.tok {
            Tok::Close(c) => ParseDiagnostic::new(
                t.pos,
                format!("unbalanced parentheses: unexpected `{c}`"),
                vec!["operator".into(), "end of input".into()],
            ),
            _ => ParseDiagnostic::new(
                t.pos,
                format!("expected an operator before `{}` (juxtaposition is not conjunction)", t.text),
                vec!["operator".into(), "end of input".into()],
            ),
        }
    }
}

pub(crate) fn parse(text: &str, config: SyntaxConfig) -> Result<Formula, ParseDiagnostic> {
    let tokens = lex(text, config.notation)?;
    let end = text.chars().count();
    if tokens.is_empty() {
        return Err(ParseDiagnostic::new(0, "empty formula", vec!["variable".into(), "constant".into()]));
    }
    let mut p = Parser { tokens, at: 0, end, config };
    let f = p.expr(0)?;
    match p.peek().cloned() {
        None => Ok(f),
        Some(t) => Err(p.juxtaposition(t)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::notation::Encoding;
    use crate::value::TruthValue;

    fn cfg(n: NotationId) -> SyntaxConfig {
        SyntaxConfig::new(n, Encoding::Ascii)
    }

    fn v(name: &str) -> Formula {
        Formula::var(name)
    }

    #[test]
    fn claw_is_right_associative() {
        let f = parse("x -< y -< z", cfg(NotationId::Peirce)).unwrap();
        assert_eq!(f, Formula::implies(v("x"), Formula::implies(v("y"), v("z"))));
    }

    #[test]
    fn peirces_law_in_peano_russell() {
        let f = parse("((A > B) > A) > A", cfg(NotationId::PeanoRussell)).unwrap();
        let ab = Formula::implies(v("A"), v("B"));
        assert_eq!(f, Formula::implies(Formula::implies(ab, v("A")), v("A")));
    }

    #[test]
    fn single_variable_in_every_notation() {
        for n in NotationId::ALL {
            assert_eq!(parse("a", cfg(n)).unwrap(), v("a"));
        }
    }

    #[test]
    fn precedence_ladder() {
        let f = parse("!a & b | c -> d <-> e", cfg(NotationId::Modern)).unwrap();
        let expected = Formula::iff(
            Formula::implies(Formula::or(Formula::and(Formula::not(v("a")), v("b")), v("c")), v("d")),
            v("e"),
        );
        assert_eq!(f, expected);
    }

    #[test]
    fn conjunction_nests_left() {
        let f = parse("a & b & c", cfg(NotationId::Modern)).unwrap();
        assert_eq!(f, Formula::and(Formula::and(v("a"), v("b")), v("c")));
    }

    #[test]
    fn brackets_of_all_kinds() {
        let f = parse("[(a > b)] > {c}", cfg(NotationId::PeanoRussell)).unwrap();
        assert_eq!(f, Formula::implies(Formula::implies(v("a"), v("b")), v("c")));
        let err = parse("(a > b]", cfg(NotationId::PeanoRussell)).unwrap_err();
        assert!(err.message.contains("mismatched"), "{err}");
    }

    #[test]
    fn peirce_overbar_and_prefix_dash() {
        let u = SyntaxConfig::new(NotationId::Peirce, Encoding::Unicode);
        let a_bar = format!("a{}", MACRON);
        assert_eq!(parse(&a_bar, u).unwrap(), Formula::not(v("a")));
        assert_eq!(parse("ā", u).unwrap(), Formula::not(v("a")));
        assert_eq!(parse("-(a ≺ b)", u).unwrap(), Formula::not(Formula::implies(v("a"), v("b"))));
        assert_eq!(parse(&format!("-{a_bar}"), u).unwrap(), Formula::not(Formula::not(v("a"))));
        assert_eq!(parse("--a", cfg(NotationId::Peirce)).unwrap(), Formula::not(Formula::not(v("a"))));
    }

    #[test]
    fn schroeder_prime_is_postfix() {
        let f = parse("(a =< b)''", cfg(NotationId::Schroeder)).unwrap();
        assert_eq!(f, Formula::not(Formula::not(Formula::implies(v("a"), v("b")))));
        let g = parse("c′ ⋐ a", cfg(NotationId::Schroeder)).unwrap();
        assert_eq!(g, Formula::implies(Formula::not(v("c")), v("a")));
        assert_eq!(parse("c ⊆ a", cfg(NotationId::Schroeder)).unwrap(), Formula::implies(v("c"), v("a")));
    }

    #[test]
    fn constants_are_reserved_words() {
        let t = Formula::constant(TruthValue::T);
        let f = Formula::constant(TruthValue::F);
        assert_eq!(parse("f -< v", cfg(NotationId::Peirce)).unwrap(), Formula::implies(f.clone(), t.clone()));
        assert_eq!(parse("T -> F", cfg(NotationId::Modern)).unwrap(), Formula::implies(t.clone(), f.clone()));
        assert_eq!(parse("⊤ → ⊥", cfg(NotationId::Modern)).unwrap(), Formula::implies(t.clone(), f.clone()));
        assert_eq!(parse("0 > 1", cfg(NotationId::PeanoRussell)).unwrap(), Formula::implies(f, t));
        // not reserved outside their notation
        assert_eq!(parse("v", cfg(NotationId::Modern)).unwrap(), v("v"));
    }

    #[test]
    fn diagnostics() {
        let m = cfg(NotationId::Modern);
        let e = parse("a -> ", m).unwrap_err();
        assert!(e.message.contains("dangling"), "{e}");
        assert_eq!(e.position, 5);

        let e = parse("(a & b", m).unwrap_err();
        assert!(e.message.contains("unbalanced"), "{e}");
        assert_eq!(e.position, 6);

        let e = parse("a & b)", m).unwrap_err();
        assert!(e.message.contains("unbalanced"), "{e}");
        assert_eq!(e.position, 5);

        let e = parse("a $ b", m).unwrap_err();
        assert!(e.message.contains("unknown symbol"), "{e}");
        assert_eq!(e.position, 2);

        let e = parse("a ⊃ b", m).unwrap_err();
        assert!(e.message.contains("peano-russell"), "{e}");
        assert_eq!(e.position, 2);

        let e = parse("a b", m).unwrap_err();
        assert!(e.message.contains("juxtaposition"), "{e}");
        assert_eq!(e.position, 2);

        let e = parse("-> a", m).unwrap_err();
        assert!(e.message.contains("dangling"), "{e}");
        assert_eq!(e.position, 0);

        assert!(parse("   ", m).unwrap_err().message.contains("empty"));
        assert!(parse("'a", cfg(NotationId::Schroeder)).unwrap_err().message.contains("nothing to negate"));
    }

    #[test]
    fn diagnostic_positions_count_characters() {
        let e = parse("ā ≺ ", SyntaxConfig::new(NotationId::Peirce, Encoding::Unicode)).unwrap_err();
        assert_eq!(e.position, 4);
        assert!(e.position <= "ā ≺ ".chars().count());
    }

    #[test]
    fn multi_character_names() {
        let f = parse("alpha_1 & beta2", cfg(NotationId::Modern)).unwrap();
        assert_eq!(f, Formula::and(v("alpha_1"), v("beta2")));
    }
}

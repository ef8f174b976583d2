//! Plain-text polynomial and vector-field format.
//!
//! A polynomial is a sum of terms, each a `*`-separated product of factors:
//!
//! ```text
//! poly   := ws [sign] term (sign term)* ws
//! term   := factor ("*" factor)*
//! factor := int ["/" int] | var ["^" int]
//! var    := prefix digits          e.g. z1, z12, x4
//! sign   := "+" | "-"
//! ```
//!
//! Whitespace is ignored between tokens. Variables are numbered from 1:
//! affine chart coordinates use the prefix `z`, homogeneous coordinates `x`.
//!
//! A field file lists the components of an affine vector field followed by
//! the affine equations of the invariant variety, one polynomial per line:
//!
//! ```text
//! # comment
//! chart = 3          (optional; homogeneous index set to 1, default last)
//! [field]
//! z2^2 * z1
//! z2^3 + 1
//! [variety]
//! z1^3 + z2^3 + 1
//! ```

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::AffineVectorField;
use super::poly::{Exponents, MultiPoly};
use crate::{Error, Result};

/// Variable naming: `prefix` followed by a 1-based index.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VarStyle {
    pub prefix: char,
}

pub const AFFINE: VarStyle = VarStyle { prefix: 'z' };
pub const HOMOGENEOUS: VarStyle = VarStyle { prefix: 'x' };

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(BigInt),
    Var(usize),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
}

fn tokenize(s: &str, style: VarStyle) -> Result<Vec<(usize, Tok)>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    let err = |col: usize, msg: &str| Error::Parse {
        col: col + 1,
        msg: msg.to_string(),
    };
    while i < chars.len() {
        let c = chars[i];
        let start = i;
        match c {
            ' ' | '\t' | '\r' => {
                i += 1;
                continue;
            }
            '+' => out.push((start, Tok::Plus)),
            '-' => out.push((start, Tok::Minus)),
            '*' => out.push((start, Tok::Star)),
            '/' => out.push((start, Tok::Slash)),
            '^' => out.push((start, Tok::Caret)),
            '0'..='9' => {
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..=i].iter().collect();
                out.push((start, Tok::Int(digits.parse().expect("ascii digits"))));
            }
            c if c == style.prefix => {
                while i + 1 < chars.len() && chars[i + 1].is_ascii_digit() {
                    i += 1;
                }
                if i == start {
                    return Err(err(start, "variable name needs an index"));
                }
                let digits: String = chars[start + 1..=i].iter().collect();
                let idx: usize = digits
                    .parse()
                    .map_err(|_| err(start, "variable index too large"))?;
                if idx == 0 {
                    return Err(err(start, "variable indices start at 1"));
                }
                out.push((start, Tok::Var(idx - 1)));
            }
            _ => return Err(err(start, &format!("unexpected character {c:?}"))),
        }
        i += 1;
    }
    Ok(out)
}

struct Parser {
    toks: Vec<(usize, Tok)>,
    pos: usize,
    num_vars: usize,
    len: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.len, |(c, _)| *c) + 1
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            col: self.col(),
            msg: msg.into(),
        }
    }

    fn int(&mut self) -> Result<BigInt> {
        match self.peek() {
            Some(Tok::Int(v)) => {
                let v = v.clone();
                self.pos += 1;
                Ok(v)
            }
            _ => Err(self.err("expected an integer")),
        }
    }

    fn factor(&mut self, coeff: &mut BigRational, exps: &mut Exponents) -> Result<()> {
        match self.peek().cloned() {
            Some(Tok::Int(num)) => {
                self.pos += 1;
                let mut value = BigRational::from_integer(num);
                if self.peek() == Some(&Tok::Slash) {
                    self.pos += 1;
                    let den = self.int()?;
                    if den.is_zero() {
                        return Err(self.err("zero denominator"));
                    }
                    value /= BigRational::from_integer(den);
                }
                *coeff *= value;
            }
            Some(Tok::Var(i)) => {
                if i >= self.num_vars {
                    return Err(self.err(format!(
                        "variable index {} exceeds {} variables",
                        i + 1,
                        self.num_vars
                    )));
                }
                self.pos += 1;
                let mut e = 1u32;
                if self.peek() == Some(&Tok::Caret) {
                    self.pos += 1;
                    e = u32::try_from(self.int()?).map_err(|_| self.err("exponent too large"))?;
                }
                exps[i] += e;
            }
            _ => return Err(self.err("expected a number or a variable")),
        }
        Ok(())
    }

    fn poly(&mut self) -> Result<MultiPoly> {
        let mut terms = Vec::new();
        let mut first = true;
        while self.pos < self.toks.len() || first {
            let mut sign = BigRational::one();
            match self.peek() {
                Some(Tok::Plus) => self.pos += 1,
                Some(Tok::Minus) => {
                    sign = -sign;
                    self.pos += 1;
                }
                _ if !first => return Err(self.err("expected '+' or '-'")),
                _ => {}
            }
            first = false;
            let mut coeff = sign;
            let mut exps = vec![0; self.num_vars];
            self.factor(&mut coeff, &mut exps)?;
            while self.peek() == Some(&Tok::Star) {
                self.pos += 1;
                self.factor(&mut coeff, &mut exps)?;
            }
            terms.push((exps, coeff));
        }
        MultiPoly::from_terms(self.num_vars, terms)
    }
}

pub fn parse_poly(s: &str, num_vars: usize, style: VarStyle) -> Result<MultiPoly> {
    let toks = tokenize(s, style)?;
    Parser {
        toks,
        pos: 0,
        num_vars,
        len: s.chars().count(),
    }
    .poly()
}

fn fmt_coeff(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Canonical text: terms by descending degree, then descending exponents.
pub fn format_poly(p: &MultiPoly, style: VarStyle) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut terms: Vec<_> = p.terms().collect();
    terms.sort_by(|(a, _), (b, _)| {
        let da: u32 = a.iter().sum();
        let db: u32 = b.iter().sum();
        db.cmp(&da).then_with(|| b.cmp(a))
    });
    let mut out = String::new();
    for (idx, (e, c)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if idx == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mut factors = Vec::new();
        let is_const = e.iter().all(|&k| k == 0);
        if is_const || !abs.is_one() {
            factors.push(fmt_coeff(&abs));
        }
        for (i, &k) in e.iter().enumerate() {
            match k {
                0 => {}
                1 => factors.push(format!("{}{}", style.prefix, i + 1)),
                _ => factors.push(format!("{}{}^{}", style.prefix, i + 1, k)),
            }
        }
        out.push_str(&factors.join(" * "));
    }
    out
}

/// A vector field in one affine chart together with the affine equations of
/// the variety it is claimed to leave invariant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldFile {
    pub field: AffineVectorField,
    pub variety: Vec<MultiPoly>,
}

impl FieldFile {
    pub fn parse(text: &str) -> Result<Self> {
        #[derive(PartialEq)]
        enum Section {
            Header,
            Field,
            Variety,
        }
        let mut section = Section::Header;
        let mut chart: Option<usize> = None;
        let mut field_lines = Vec::new();
        let mut variety_lines = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let line_err = |e: Error| match e {
                Error::Parse { col, msg } => Error::Parse {
                    col,
                    msg: format!("line {}: {msg}", lineno + 1),
                },
                other => other,
            };
            match line {
                "[field]" => section = Section::Field,
                "[variety]" => section = Section::Variety,
                _ => match section {
                    Section::Header => {
                        let value = line
                            .strip_prefix("chart")
                            .and_then(|r| r.trim_start().strip_prefix('='))
                            .ok_or_else(|| {
                                line_err(Error::Parse {
                                    col: 1,
                                    msg: "expected 'chart = <index>' or a section header".into(),
                                })
                            })?;
                        let c: usize = value.trim().parse().map_err(|_| {
                            line_err(Error::Parse {
                                col: 1,
                                msg: "chart index must be a positive integer".into(),
                            })
                        })?;
                        if c == 0 {
                            return Err(line_err(Error::Parse {
                                col: 1,
                                msg: "chart indices start at 1".into(),
                            }));
                        }
                        chart = Some(c - 1);
                    }
                    Section::Field => field_lines.push((lineno, line.to_string())),
                    Section::Variety => variety_lines.push((lineno, line.to_string())),
                },
            }
        }
        let n = field_lines.len();
        if n == 0 {
            return Err(Error::InvalidParameter(
                "field file has no [field] components".into(),
            ));
        }
        let parse_all = |lines: &[(usize, String)]| -> Result<Vec<MultiPoly>> {
            lines
                .iter()
                .map(|(lineno, l)| {
                    parse_poly(l, n, AFFINE).map_err(|e| match e {
                        Error::Parse { col, msg } => Error::Parse {
                            col,
                            msg: format!("line {}: {msg}", lineno + 1),
                        },
                        other => other,
                    })
                })
                .collect()
        };
        let components = parse_all(&field_lines)?;
        let variety = parse_all(&variety_lines)?;
        let chart = chart.unwrap_or(n);
        Ok(Self {
            field: AffineVectorField::new(components, chart)?,
            variety,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("chart = {}\n", self.field.chart() + 1));
        out.push_str("[field]\n");
        for c in self.field.components() {
            out.push_str(&format_poly(c, AFFINE));
            out.push('\n');
        }
        out.push_str("[variety]\n");
        for f in &self.variety {
            out.push_str(&format_poly(f, AFFINE));
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn parses_terms_and_rationals() {
        let p = parse_poly("3/2 * z1^2 * z2 - z3 + 1", 3, AFFINE).unwrap();
        assert_eq!(p.coeff(&[2, 1, 0]), q(3, 2));
        assert_eq!(p.coeff(&[0, 0, 1]), q(-1, 1));
        assert_eq!(p.coeff(&[0, 0, 0]), q(1, 1));
        assert_eq!(p.num_terms(), 3);
    }

    #[test]
    fn repeated_factors_multiply() {
        let p = parse_poly("2*z1*z1*3/4", 1, AFFINE).unwrap();
        assert_eq!(p.coeff(&[2]), q(3, 2));
        let p = parse_poly("-z1 + z1", 1, AFFINE).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn errors_carry_columns() {
        assert!(matches!(
            parse_poly("z1 +", 1, AFFINE),
            Err(Error::Parse { col: 5, .. })
        ));
        assert!(matches!(
            parse_poly("z3", 2, AFFINE),
            Err(Error::Parse { col: 1, .. })
        ));
        assert!(matches!(
            parse_poly("z1 z2", 2, AFFINE),
            Err(Error::Parse { col: 4, .. })
        ));
        assert!(parse_poly("1/0", 1, AFFINE).is_err());
        assert!(parse_poly("z0", 1, AFFINE).is_err());
        assert!(parse_poly("x1", 1, AFFINE).is_err());
        assert!(parse_poly("", 1, AFFINE).is_err());
    }

    #[test]
    fn canonical_format() {
        let p = parse_poly("1 - z2 + 3/2*z1^2*z2 - 2*z1", 2, AFFINE).unwrap();
        assert_eq!(format_poly(&p, AFFINE), "3/2 * z1^2 * z2 - 2 * z1 - z2 + 1");
        assert_eq!(format_poly(&MultiPoly::zero(2), AFFINE), "0");
        let h = parse_poly("-x1*x4", 4, HOMOGENEOUS).unwrap();
        assert_eq!(format_poly(&h, HOMOGENEOUS), "-x1 * x4");
    }

    #[test]
    fn field_file_round_trip() {
        let text = "# Fermat cubic\n[field]\nz2^2*z1\nz2^3 + 1\n[variety]\nz1^3+z2^3+1\n";
        let ff = FieldFile::parse(text).unwrap();
        assert_eq!(ff.field.chart(), 2);
        assert_eq!(ff.variety.len(), 1);
        let again = FieldFile::parse(&ff.to_text()).unwrap();
        assert_eq!(again, ff);
    }

    #[test]
    fn field_file_errors() {
        assert!(FieldFile::parse("[variety]\nz1\n").is_err());
        assert!(FieldFile::parse("bogus\n[field]\nz1\nz2\n").is_err());
        let e = FieldFile::parse("[field]\nz1\nz3\n").unwrap_err();
        assert!(matches!(e, Error::Parse { ref msg, .. } if msg.starts_with("line 3")));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_poly() -> impl Strategy<Value = MultiPoly> {
            proptest::collection::vec(
                (proptest::collection::vec(0u32..4, 3), -20i64..20, 1i64..6),
                0..6,
            )
            .prop_map(|ts| {
                MultiPoly::from_terms(3, ts.into_iter().map(|(e, a, b)| (e, q(a, b)))).unwrap()
            })
        }

        proptest! {
            #[test]
            fn format_then_parse_is_identity(p in arb_poly()) {
                let text = format_poly(&p, AFFINE);
                prop_assert_eq!(parse_poly(&text, 3, AFFINE).unwrap(), p);
            }
        }
    }
}

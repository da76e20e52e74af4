//! Line-based system files: `key = value` statements with `#` comments.
//!
//! ```text
//! # x' = P, y' = Q
//! P = 1 + y^2
//! Q = x*y + y
//! f = y
//! max_degree = 3
//! ```

use crate::poly::{parse_poly, BiPoly};
use crate::search::BoundRule;

use super::CliError;

/// A parsed expression together with the line it came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Statement<T> {
    pub line: usize,
    pub value: T,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SystemFile {
    pub p: Option<Statement<BiPoly>>,
    pub q: Option<Statement<BiPoly>>,
    pub curves: Vec<Statement<BiPoly>>,
    pub max_degree: Option<u32>,
    pub bound_rule: Option<BoundRule>,
    pub shear_seed: Option<i64>,
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> CliError {
    CliError::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn duplicate(key: &str, line: usize) -> CliError {
    CliError::Validation(format!("line {line}: `{key}` is defined more than once"))
}

impl SystemFile {
    pub fn parse(text: &str) -> Result<SystemFile, CliError> {
        let mut out = SystemFile::default();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let body = raw.split('#').next().unwrap_or("");
            if body.trim().is_empty() {
                continue;
            }
            let Some(eq) = body.find('=') else {
                let col = body.len() - body.trim_start().len() + 1;
                return Err(parse_error(line, col, "expected `key = value`"));
            };
            let key = body[..eq].trim();
            let value = &body[eq + 1..];
            // Column of the first byte of `value`, 1-based.
            let value_col = eq + 2;
            let value_trimmed = value.trim();
            let lead = value.len() - value.trim_start().len();
            let number_error = |what: &str| parse_error(line, value_col + lead, format!("expected {what}"));
            match key {
                "P" | "Q" | "f" => {
                    let poly = parse_poly(value).map_err(|e| {
                        parse_error(line, value_col + e.offset(), e.to_string())
                    })?;
                    let st = Statement { line, value: poly };
                    match key {
                        "P" if out.p.is_some() => return Err(duplicate(key, line)),
                        "Q" if out.q.is_some() => return Err(duplicate(key, line)),
                        "P" => out.p = Some(st),
                        "Q" => out.q = Some(st),
                        _ => out.curves.push(st),
                    }
                }
                "max_degree" => {
                    if out.max_degree.is_some() {
                        return Err(duplicate(key, line));
                    }
                    let n: u32 = value_trimmed
                        .parse()
                        .ok()
                        .filter(|&n| n >= 1)
                        .ok_or_else(|| number_error("a positive integer"))?;
                    out.max_degree = Some(n);
                }
                "bound_rule" => {
                    if out.bound_rule.is_some() {
                        return Err(duplicate(key, line));
                    }
                    let rule = value_trimmed
                        .parse()
                        .map_err(|e: crate::search::BoundRuleError| number_error(&e.to_string()))?;
                    out.bound_rule = Some(rule);
                }
                "shear_seed" => {
                    if out.shear_seed.is_some() {
                        return Err(duplicate(key, line));
                    }
                    let t: i64 = value_trimmed.parse().map_err(|_| number_error("an integer"))?;
                    out.shear_seed = Some(t);
                }
                other => {
                    let col = body.len() - body.trim_start().len() + 1;
                    return Err(parse_error(line, col, format!("unknown key `{other}`")));
                }
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_file() {
        let text = "# first example\nP = 1 + y^2\nQ = x*y + y  # comment\n\nf = y\nf = x\nmax_degree = 3\nshear_seed = -2\n";
        let s = SystemFile::parse(text).unwrap();
        assert_eq!(s.p.unwrap().value, parse_poly("1 + y^2").unwrap());
        assert_eq!(s.curves.len(), 2);
        assert_eq!(s.curves[1].line, 6);
        assert_eq!(s.max_degree, Some(3));
        assert_eq!(s.shear_seed, Some(-2));
    }

    #[test]
    fn implicit_multiplication_points_at_variable() {
        let err = SystemFile::parse("P = 2x\n").unwrap_err();
        match err {
            CliError::Parse { line, column, .. } => assert_eq!((line, column), (1, 6)),
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn structural_errors() {
        assert!(matches!(SystemFile::parse("P = x\nP = y\n"), Err(CliError::Validation(_))));
        assert!(matches!(SystemFile::parse("R = x\n"), Err(CliError::Parse { .. })));
        assert!(matches!(SystemFile::parse("P x\n"), Err(CliError::Parse { .. })));
        assert!(matches!(SystemFile::parse("max_degree = 0\n"), Err(CliError::Parse { .. })));
        assert_eq!(
            SystemFile::parse("bound_rule = k:3\n").unwrap().bound_rule,
            Some(BoundRule::KBounded(3))
        );
    }
}

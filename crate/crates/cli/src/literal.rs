//! Complex literals `re,im` and `mod@arg`.
use borelwkb::{Complex64, SheetPoint};
use std::fmt;
use std::str::FromStr;

/// A parsed complex literal. The polar form keeps its argument verbatim so
/// callers can place the point on a chosen sheet.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexLiteral {
    pub value: Complex64,
    pub arg: Option<f64>,
}

impl ComplexLiteral {
    /// Sheet point; the rectangular form takes its argument in `(0, 2π]`.
    pub fn sheet(&self) -> SheetPoint {
        match self.arg {
            Some(arg) => SheetPoint::new(self.value.norm(), arg),
            None => SheetPoint::from_complex(self.value),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LiteralError(String);

impl fmt::Display for LiteralError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for LiteralError {}

fn number(text: &str, what: &str) -> Result<f64, LiteralError> {
    let v: f64 = text
        .trim()
        .parse()
        .map_err(|_| LiteralError(format!("invalid {what} `{text}`")))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(LiteralError(format!("{what} `{text}` is not finite")))
    }
}

impl FromStr for ComplexLiteral {
    type Err = LiteralError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match (s.contains('@'), s.contains(',')) {
            (true, true) => Err(LiteralError(format!("`{s}` mixes `re,im` and `mod@arg` forms"))),
            (true, false) => {
                let (m, a) = s.split_once('@').expect("contains @");
                let modulus = number(m, "modulus")?;
                if modulus < 0.0 {
                    return Err(LiteralError(format!("negative modulus in `{s}`")));
                }
                let arg = number(a, "argument")?;
                Ok(Self {
                    value: Complex64::from_polar(modulus, arg),
                    arg: Some(arg),
                })
            }
            (false, true) => {
                let (r, i) = s.split_once(',').expect("contains ,");
                Ok(Self {
                    value: Complex64::new(number(r, "real part")?, number(i, "imaginary part")?),
                    arg: None,
                })
            }
            (false, false) => Ok(Self {
                value: Complex64::new(number(s, "real number")?, 0.0),
                arg: None,
            }),
        }
    }
}

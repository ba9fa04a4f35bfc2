//! Textual coding-system specifications.
//!
//! ```text
//! # rotation by (p + q·√d)/r
//! alpha: -1 1 2 5
//! symbols: a b
//! arc: a 0 1        # endpoints are integer multiples of alpha, reduced mod 1
//! arc: b 1 0
//! start: 0 0        # optional x0 = u + v·alpha (u, v rationals like 1/2)
//! ```

use std::sync::Arc as StdArc;

use num_bigint::BigInt;
use words_core::Alphabet;

use crate::circle::{Arc, CirclePoint};
use crate::error::RotationError;
use crate::quadratic::QuadraticReal;
use crate::system::CodingSystem;

pub fn parse_system(text: &str) -> Result<CodingSystem, RotationError> {
    let mut alpha: Option<QuadraticReal> = None;
    let mut alphabet: Option<StdArc<Alphabet>> = None;
    let mut arcs: Vec<Vec<Arc>> = Vec::new();
    let mut start_spec: Option<(QuadraticReal, QuadraticReal)> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let lineno = idx + 1;
        let (key, rest) = line
            .split_once(':')
            .ok_or_else(|| err(lineno, "expected `key: ...`"))?;
        let fields: Vec<&str> = rest.split_whitespace().collect();
        match key.trim() {
            "alpha" => {
                if fields.len() != 4 {
                    return Err(err(lineno, "alpha takes four integers: p q r d"));
                }
                let nums: Vec<i64> = fields
                    .iter()
                    .map(|f| f.parse().map_err(|_| err(lineno, "bad integer")))
                    .collect::<Result<_, _>>()?;
                let d = u64::try_from(nums[3]).map_err(|_| err(lineno, "d must be positive"))?;
                alpha = Some(QuadraticReal::new(nums[0], nums[1], nums[2], d)?);
            }
            "symbols" => {
                if fields.is_empty() {
                    return Err(err(lineno, "symbols line lists at least one token"));
                }
                let a = Alphabet::new(fields.iter().map(|s| s.to_string()))?;
                arcs = vec![Vec::new(); a.len()];
                alphabet = Some(a);
            }
            "arc" => {
                let a = alphabet
                    .as_ref()
                    .ok_or_else(|| err(lineno, "arc before symbols line"))?;
                let alpha_val = alpha
                    .as_ref()
                    .ok_or_else(|| err(lineno, "arc before alpha line"))?;
                if fields.len() != 3 {
                    return Err(err(lineno, "arc takes: symbol start end"));
                }
                let sym = a
                    .id_of(fields[0])
                    .ok_or_else(|| RotationError::UnknownSymbol(fields[0].to_string()))?;
                let s =
                    endpoint(fields[1], alpha_val).ok_or_else(|| err(lineno, "bad endpoint"))?;
                let e =
                    endpoint(fields[2], alpha_val).ok_or_else(|| err(lineno, "bad endpoint"))?;
                arcs[sym.index()].push(Arc::new(s, e));
            }
            "start" => {
                if fields.len() != 2 {
                    return Err(err(lineno, "start takes two rationals: u v"));
                }
                let u = rational(fields[0]).ok_or_else(|| err(lineno, "bad rational"))?;
                let v = rational(fields[1]).ok_or_else(|| err(lineno, "bad rational"))?;
                start_spec = Some((u, v));
            }
            other => return Err(err(lineno, &format!("unknown key {other:?}"))),
        }
    }

    let alpha = alpha.ok_or_else(|| err(0, "missing alpha line"))?;
    let alphabet = alphabet.ok_or_else(|| err(0, "missing symbols line"))?;
    let start = match start_spec {
        None => CirclePoint::zero(),
        Some((u, v)) => {
            let (num, den) = {
                let (p, _, r, _) = v.parts();
                (p.clone(), r.clone())
            };
            CirclePoint::new(&u + &alpha.mul_ratio(&num, &den)?)
        }
    };
    CodingSystem::new(alphabet, alpha, start, arcs)
}

fn err(line: usize, message: &str) -> RotationError {
    RotationError::SystemFile {
        line,
        message: message.to_string(),
    }
}

/// Endpoint token: an integer `n` or the form `n*alpha`, meaning `n·alpha`
/// reduced mod 1.
fn endpoint(token: &str, alpha: &QuadraticReal) -> Option<CirclePoint> {
    let n: i64 = token
        .strip_suffix("*alpha")
        .unwrap_or(token)
        .trim()
        .parse()
        .ok()?;
    Some(CirclePoint::new(alpha.mul_int(n)))
}

/// `n` or `n/m`.
fn rational(token: &str) -> Option<QuadraticReal> {
    match token.split_once('/') {
        None => token.parse::<i64>().ok().map(QuadraticReal::from_integer),
        Some((n, m)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let m: BigInt = m.trim().parse().ok()?;
            QuadraticReal::from_ratio(n, m).ok()
        }
    }
}

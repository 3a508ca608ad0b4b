use germs::Germ;

use crate::color::Color;
use crate::LexicalError;

/// Leading ascent of a digit string: from a 0, the maximal run `0 1 2 ..`;
/// otherwise the maximal non-descending run with at most one repeated step.
fn ascent(digits: &[u8]) -> usize {
    let Some(&first) = digits.first() else {
        return 0;
    };
    let mut j = 1;
    if first == 0 {
        while j < digits.len() && digits[j] == digits[j - 1] + 1 {
            j += 1;
        }
        return j;
    }
    let mut repeated = false;
    while j < digits.len() && digits[j] >= digits[j - 1] {
        if digits[j] == digits[j - 1] {
            if repeated {
                break;
            }
            repeated = true;
        }
        j += 1;
    }
    j
}

/// Replaces each ascent `A_j` by the reversal of `B_j - A_j`, where the
/// first bound is given and later ones are `|A_{j-1}| + |A_j| - 2`.
fn reflect_ascents(digits: &[u8], first_bound: impl Fn(usize) -> i64) -> Vec<i64> {
    let mut out = Vec::with_capacity(digits.len());
    let mut rest = digits;
    let mut prev: Option<usize> = None;
    while !rest.is_empty() {
        let len = ascent(rest);
        let bound = match prev {
            None => first_bound(len),
            Some(p) => (p + len) as i64 - 2,
        };
        out.extend(rest[..len].iter().rev().map(|&d| bound - i64::from(d)));
        prev = Some(len);
        rest = &rest[len..];
    }
    out
}

fn to_germ(g: &Germ, p: Color, values: Vec<i64>) -> Result<Germ, LexicalError> {
    let infeasible = || LexicalError::DirectInfeasible {
        germ: g.to_string(),
        color: p,
        values: values.clone(),
    };
    let digits = values
        .iter()
        .map(|&v| u8::try_from(v).map_err(|_| infeasible()))
        .collect::<Result<Vec<_>, _>>()?;
    Germ::new(digits).map_err(|_| infeasible())
}

/// Digits `a_p .. a_1` of the color-p neighbor for `0 < p < k - 1`, from
/// the right part alone. The entries left of it are not determined by this
/// step.
pub fn neighbor_direct_suffix(g: &Germ, p: Color) -> Result<Vec<i64>, LexicalError> {
    let k = g.k();
    let q = usize::from(p) + 1;
    if p == 0 || q >= k {
        return Err(LexicalError::DirectColor { color: p, k });
    }
    let a_q = i64::from(g.entry(q));
    let right = &g.digits()[k - q..];
    Ok(reflect_ascents(right, |len| len as i64 + a_q))
}

/// The color-p neighbor computed on the digits alone, without colors or
/// graphs. Defined for `p = k` and `p = k - 1`; for smaller positive `p`
/// the processing of the left part is not determined and is reported.
pub fn neighbor_direct(g: &Germ, p: Color) -> Result<Germ, LexicalError> {
    let k = g.k();
    let pu = usize::from(p);
    if p == 0 || pu > k {
        return Err(LexicalError::DirectColor { color: p, k });
    }
    if pu == k {
        let mut digits = g.digits().to_vec();
        let padded = digits.first() == Some(&1);
        if padded {
            digits.insert(0, 0);
        }
        let mut values = reflect_ascents(&digits, |len| len as i64 - 1);
        if padded {
            values.remove(0);
        }
        return to_germ(g, p, values);
    }
    if pu + 1 == k {
        let values = reflect_ascents(g.digits(), |len| len as i64);
        return to_germ(g, p, values);
    }
    Err(LexicalError::DirectUnderspecified {
        germ: g.to_string(),
        color: p,
    })
}

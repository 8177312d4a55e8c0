//! Complex coefficient literals: `a`, `ai`, `a+bi`, `a-bi` with decimal or
//! scientific notation.

use tschirnhaus::C64;

pub fn parse_complex(s: &str) -> Result<C64, String> {
    let t = s.trim();
    if t.is_empty() {
        return Err("empty complex literal".into());
    }
    let value = if let Some(body) = t.strip_suffix(['i', 'I']) {
        if let Some(k) = imaginary_split(body) {
            let re = parse_real(&body[..k])?;
            let im = match &body[k..] {
                "+" => 1.0,
                "-" => -1.0,
                part => parse_real(part)?,
            };
            C64::new(re, im)
        } else {
            let im = match body {
                "" | "+" => 1.0,
                "-" => -1.0,
                part => parse_real(part)?,
            };
            C64::new(0.0, im)
        }
    } else {
        C64::new(parse_real(t)?, 0.0)
    };
    if !value.re.is_finite() || !value.im.is_finite() {
        return Err(format!("non-finite complex literal '{t}'"));
    }
    Ok(value)
}

/// Index of the sign separating real and imaginary parts, skipping exponent
/// signs and a leading sign.
fn imaginary_split(body: &str) -> Option<usize> {
    let bytes = body.as_bytes();
    for k in (1..bytes.len()).rev() {
        if (bytes[k] == b'+' || bytes[k] == b'-') && !matches!(bytes[k - 1], b'e' | b'E') {
            return Some(k);
        }
    }
    None
}

fn parse_real(s: &str) -> Result<f64, String> {
    s.trim()
        .parse::<f64>()
        .map_err(|_| format!("invalid numeric literal '{}'", s.trim()))
}

/// Descending-power coefficient list, `c_n,...,c_0`.
pub fn parse_coeff_list(s: &str) -> Result<Vec<C64>, String> {
    let coeffs: Vec<C64> = s
        .split(',')
        .map(parse_complex)
        .collect::<Result<_, _>>()?;
    if !(2..=6).contains(&coeffs.len()) {
        return Err(format!(
            "expected 2 to 6 coefficients (degree 1-5), got {}",
            coeffs.len()
        ));
    }
    if coeffs[0].norm() == 0.0 {
        return Err("leading coefficient must be nonzero".into());
    }
    Ok(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn literal_forms() {
        assert_eq!(parse_complex("1").unwrap(), C64::new(1.0, 0.0));
        assert_eq!(parse_complex("-2.5").unwrap(), C64::new(-2.5, 0.0));
        assert_eq!(parse_complex("3e-2").unwrap(), C64::new(0.03, 0.0));
        assert_eq!(parse_complex("2i").unwrap(), C64::new(0.0, 2.0));
        assert_eq!(parse_complex("-1.5e3i").unwrap(), C64::new(0.0, -1500.0));
        assert_eq!(parse_complex("1+2i").unwrap(), C64::new(1.0, 2.0));
        assert_eq!(parse_complex("1-2i").unwrap(), C64::new(1.0, -2.0));
        assert_eq!(parse_complex("-1+2e-5i").unwrap(), C64::new(-1.0, 2e-5));
        assert_eq!(parse_complex("i").unwrap(), C64::new(0.0, 1.0));
        assert_eq!(parse_complex("-i").unwrap(), C64::new(0.0, -1.0));
        assert_eq!(parse_complex("1+i").unwrap(), C64::new(1.0, 1.0));
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_complex("bogus").is_err());
        assert!(parse_complex("").is_err());
        assert!(parse_complex("1+ 2 j").is_err());
        assert!(parse_complex("inf").is_err());
        assert!(parse_complex("1e999").is_err());
    }

    #[test]
    fn coefficient_lists() {
        let v = parse_coeff_list("1,0,0,0,0,-1").unwrap();
        assert_eq!(v.len(), 6);
        assert_eq!(v[5], C64::new(-1.0, 0.0));
        assert!(parse_coeff_list("1").is_err());
        assert!(parse_coeff_list("1,2,3,4,5,6,7").is_err());
        assert!(parse_coeff_list("0,1,2").is_err());
        assert!(parse_coeff_list("1,bogus").is_err());
    }
}

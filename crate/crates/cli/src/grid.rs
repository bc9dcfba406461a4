use std::str::FromStr;

use num_complex::Complex64;

/// `min:max:count` or a single value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum GridSpec {
    Point(f64),
    Range { x_min: f64, x_max: f64, n_points: usize },
}

impl GridSpec {
    pub fn points(&self) -> Vec<f64> {
        match *self {
            GridSpec::Point(x) => vec![x],
            GridSpec::Range { x_min, x_max, n_points } => {
                let h = (x_max - x_min) / (n_points - 1) as f64;
                (0..n_points)
                    .map(|k| if k + 1 == n_points { x_max } else { x_min + h * k as f64 })
                    .collect()
            }
        }
    }
}

impl FromStr for GridSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |t: &str| t.trim().parse::<f64>().map_err(|_| format!("bad number {t:?} in grid {s:?}"));
        match parts.as_slice() {
            [x] => {
                let x = num(x)?;
                if !x.is_finite() {
                    return Err(format!("grid value must be finite, got {s:?}"));
                }
                Ok(GridSpec::Point(x))
            }
            [a, b, n] => {
                let (x_min, x_max) = (num(a)?, num(b)?);
                let n_points: usize = n.trim().parse().map_err(|_| format!("bad point count {n:?} in grid {s:?}"))?;
                if !(x_min.is_finite() && x_max.is_finite()) || x_min >= x_max {
                    return Err(format!("grid needs finite min < max, got {s:?}"));
                }
                if n_points < 2 {
                    return Err(format!("grid needs at least 2 points, got {n_points}"));
                }
                Ok(GridSpec::Range { x_min, x_max, n_points })
            }
            _ => Err(format!("grid must be VALUE or MIN:MAX:COUNT, got {s:?}")),
        }
    }
}

/// Complex number flag value such as `0.5`, `2+1i` or `-1.5i`.
pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let t = s.trim().replace('j', "i");
    Complex64::from_str(&t).map_err(|_| format!("bad complex number {s:?}"))
}

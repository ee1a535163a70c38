use std::path::Path;

use quiver_core::io::parse_quiver;
use quiver_core::{find_delta, BigRational, CoweightVector, Quiver};
use series::TruncationWindow;

use crate::CliError;

/// Built-in quiver names accepted by `--quiver` besides file paths.
pub const BUILTIN_QUIVERS: &[&str] = &["A1", "kronecker", "A1~", "A2~", "A3~", "D4~", "E6~", "E7~", "E8~"];

pub fn builtin_quiver(name: &str) -> Option<Quiver> {
    Some(match name {
        "A1" => Quiver::single_vertex(),
        "kronecker" | "A1~" => Quiver::kronecker(),
        "E6~" => Quiver::affine_e(6),
        "E7~" => Quiver::affine_e(7),
        "E8~" => Quiver::affine_e(8),
        _ => {
            let rest = name.strip_suffix('~')?;
            let (kind, n) = rest.split_at(1);
            let n: usize = n.parse().ok()?;
            match kind {
                "A" if n >= 1 => Quiver::affine_a(n),
                "D" if n >= 4 => Quiver::affine_d(n),
                _ => return None,
            }
        }
    })
}

/// A quiver file, or one of [`BUILTIN_QUIVERS`] (`An~` and `Dn~` for any rank).
pub fn load_quiver(arg: &str) -> Result<Quiver, CliError> {
    let path = Path::new(arg);
    if path.exists() {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{arg}: {e}")))?;
        return parse_quiver(&text).map_err(|e| CliError::Input(format!("{arg}: {e}")));
    }
    builtin_quiver(arg).ok_or_else(|| {
        CliError::Input(format!("`{arg}` is neither a file nor a built-in quiver ({})", BUILTIN_QUIVERS.join(", ")))
    })
}

fn parse_list<T: std::str::FromStr>(text: &str, what: &str) -> Result<Vec<T>, CliError> {
    text.split(',')
        .map(|x| x.trim().parse().map_err(|_| CliError::Input(format!("bad {what} entry `{x}`"))))
        .collect()
}

pub fn parse_ints(text: &str, what: &str) -> Result<Vec<i64>, CliError> {
    parse_list(text, what)
}

/// `--theta`: either the full coweight (one entry per vertex) or its finite
/// part, extended by `(θ, δ) = 0`. Defaults to `ρ̌` on the finite part.
/// Affine workflows need `θ̌_i > 0` on the finite vertices.
pub fn parse_theta(q: &Quiver, text: Option<&str>) -> Result<CoweightVector, CliError> {
    let aff = find_delta(q).map_err(|e| CliError::Input(format!("θ needs an affine quiver: {e}")))?;
    let n = q.num_vertices();
    let theta = match text {
        None => aff.coweight_from_finite(&vec![BigRational::from_integer(1.into()); n - 1]),
        Some(t) => {
            let vals: Vec<BigRational> = parse_list(t, "theta")?;
            if vals.len() == n - 1 {
                aff.coweight_from_finite(&vals)
            } else if vals.len() == n {
                let theta = CoweightVector(vals);
                let pd = theta.pair(&aff.delta).map_err(|e| CliError::Input(e.to_string()))?;
                if pd != BigRational::from_integer(0.into()) {
                    return Err(CliError::Input(format!("θ = {theta} must vanish on δ")));
                }
                theta
            } else {
                return Err(CliError::Input(format!("θ needs {} or {n} entries, got {}", n - 1, vals.len())));
            }
        }
    };
    let zero = BigRational::from_integer(0.into());
    if theta.0[1..].iter().any(|x| x <= &zero) {
        return Err(CliError::Input(format!("θ = {theta} must be positive on the finite vertices")));
    }
    Ok(theta)
}

/// `--window D` or `--window D,K`: total degree `≤ D` and `q`-degree `≤ K`
/// (default `K = D`).
pub fn parse_window(n: usize, text: &str) -> Result<TruncationWindow, CliError> {
    let vals = parse_ints(text, "window")?;
    let (d, k) = match vals[..] {
        [d] => (d, d),
        [d, k] => (d, k),
        _ => return Err(CliError::Input(format!("window `{text}` must be D or D,K"))),
    };
    for b in [d, k] {
        if b < 0 {
            return Err(CliError::Input(format!("window bound {b} must be nonnegative")));
        }
    }
    Ok(TruncationWindow::total(n, d, k))
}

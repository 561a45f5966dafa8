use super::{run, Algorithm, Answer, SolveOptions, SolveResult};
use crate::error::{Error, Result};
use crate::graph::{contains_disjoint_p5, contains_disjoint_paths, Graph};

/// Parses a forbidden linear forest given as comma or space separated path
/// orders, e.g. `"5,4,3"`.
pub fn parse_forbidden(text: &str) -> Result<Vec<usize>> {
    let parts: Vec<&str> = text.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()).collect();
    if parts.is_empty() {
        return Err(Error::invalid("empty forbidden minor"));
    }
    parts
        .iter()
        .map(|p| match p.parse::<usize>() {
            Ok(0) | Err(_) => Err(Error::invalid(format!("bad path order `{p}`"))),
            Ok(v) => Ok(v),
        })
        .collect()
}

/// Which solver a forbidden linear forest leads to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Route {
    P4free,
    P4Kp3 { k: usize },
    /// `kP4`-minor-free inputs have a `P4`-hitting set of size `4(k-1)`.
    Hitting { k: usize },
    /// `pP5 + kP4` with `p` in `{1, 2}`: depends on the inputs.
    Mixed { p: usize, k: usize },
    Hard,
}

impl Route {
    pub fn of(forbidden: &[usize]) -> Result<Route> {
        if forbidden.is_empty() || forbidden.contains(&0) {
            return Err(Error::invalid("forbidden minor needs positive path orders"));
        }
        let fives = forbidden.iter().filter(|&&l| l == 5).count();
        let fours = forbidden.iter().filter(|&&l| l == 4).count();
        let others = forbidden.len() - fives;
        Ok(if forbidden.iter().any(|&l| l >= 6) || fives >= 3 {
            Route::Hard
        } else if forbidden.iter().sum::<usize>() <= 4 {
            Route::P4free
        } else if fives > 0 {
            Route::Mixed { p: fives, k: others }
        } else if fours <= 1 {
            Route::P4Kp3 { k: forbidden.len() - 1 }
        } else {
            Route::Hitting { k: forbidden.len() }
        })
    }
}

/// Picks a solver from the forbidden minor `H` the inputs are promised to
/// exclude, and runs it.
pub fn dispatch(g: &Graph, q: &Graph, forbidden: &[usize], opts: &SolveOptions) -> Result<SolveResult> {
    let route = Route::of(forbidden)?;
    let with = |algo: Algorithm, param: Option<usize>, note: String| -> Result<SolveResult> {
        let o = SolveOptions { param, forbidden: None, ..opts.clone() };
        let mut r = run(algo, g, q, &o)?;
        r.notes.insert(0, note);
        Ok(r)
    };
    match route {
        Route::P4free => with(Algorithm::P4free, None, "forbidden minor is a subgraph of P4".into()),
        Route::P4Kp3 { k } => with(Algorithm::P4kp3, Some(k), format!("forbidden minor fits in P4 + {k}P3")),
        Route::Hitting { k } => with(
            Algorithm::Hitting,
            Some(4 * (k - 1)),
            format!("forbidden minor fits in {k}P4, hitting number at most {}", 4 * (k - 1)),
        ),
        Route::Hard => with(
            Algorithm::Oracle,
            None,
            "warning: NP-hard case (P6 or 3P5 in the forbidden minor), using the backtracking oracle".into(),
        ),
        Route::Mixed { p, k } => {
            let t = k + 5 * p;
            let host_p4 = contains_disjoint_paths(g, 4, t);
            let pattern_p4 = contains_disjoint_paths(q, 4, t);
            if !host_p4 && !pattern_p4 {
                return with(
                    Algorithm::Hitting,
                    Some(4 * (t - 1)),
                    format!("both inputs exclude {t}P4, hitting number at most {}", 4 * (t - 1)),
                );
            }
            if (!host_p4 && pattern_p4) || (!contains_disjoint_p5(g, p) && contains_disjoint_p5(q, p)) {
                let mut r = SolveResult::new(Algorithm::Auto);
                r.answer = Answer::No;
                r.notes.push(format!("pattern contains {t}P4 or {p}P5 but the host does not"));
                return Ok(r);
            }
            let reason = format!("open case: inputs contain {t}P4 and the {p}P5-minor-free case is unresolved");
            if opts.fallback {
                with(Algorithm::Oracle, None, format!("{reason}; falling back to the oracle"))
            } else {
                Ok(SolveResult::unknown(Algorithm::Auto, reason))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_family, Family};

    #[test]
    fn routes() {
        assert_eq!(Route::of(&[4]).unwrap(), Route::P4free);
        assert_eq!(Route::of(&[2, 2]).unwrap(), Route::P4free);
        assert_eq!(Route::of(&[4, 3, 3]).unwrap(), Route::P4Kp3 { k: 2 });
        assert_eq!(Route::of(&[4, 4, 1]).unwrap(), Route::Hitting { k: 3 });
        assert_eq!(Route::of(&[5, 2]).unwrap(), Route::Mixed { p: 1, k: 1 });
        assert_eq!(Route::of(&[6]).unwrap(), Route::Hard);
        assert_eq!(Route::of(&[5, 5, 5]).unwrap(), Route::Hard);
        assert!(parse_forbidden("4,,x").is_err());
        assert_eq!(parse_forbidden("5, 4 3").unwrap(), vec![5, 4, 3]);
    }

    #[test]
    fn p5_with_many_p4s_is_open() {
        let five_p5 = make_family(&Family::DisjointUnion(vec![Family::Path(5); 5])).unwrap();
        let r = dispatch(&five_p5, &five_p5, &[5], &SolveOptions::default()).unwrap();
        assert_eq!(r.answer, Answer::Unknown);
        assert!(r.notes[0].starts_with("open case"));
        let fb = SolveOptions { fallback: true, ..SolveOptions::default() };
        assert_eq!(dispatch(&five_p5, &five_p5, &[5], &fb).unwrap().answer, Answer::Yes);
    }
}

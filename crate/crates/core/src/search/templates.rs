use super::{Domain, Params, ParamSpec, Searcher, Template, Witness, Bounds, Outcome};
use crate::patterns::{Sign, SignPattern};
use crate::polytopes::Construction::{self, Cube, Interval, Reeve};
use crate::{Error, Result};

const RANGE_M: Domain = Domain::Range { lo: 1, hi: 4096 };

/// Ladder limits used by [`construct_tail_pattern`].
pub const TAIL_BOUNDS: [(&str, u64); 3] = [("m", 1 << 32), ("r", 1 << 16), ("b", 1 << 16)];

fn tail_ladder(name: &'static str, lo: u64) -> ParamSpec {
    let hi = TAIL_BOUNDS.iter().find(|(n, _)| *n == name).map_or(1 << 16, |&(_, hi)| hi);
    ParamSpec { name, domain: Domain::Ladder { lo, hi } }
}

fn m(p: &Params) -> u64 {
    p["m"]
}

pub fn reeve() -> Template {
    Template::new("reeve", vec![ParamSpec { name: "m", domain: RANGE_M }], |p| Ok(Reeve(m(p))))
}

pub fn pyr(k: u32) -> Template {
    Template::new(format!("pyr:{k}"), vec![ParamSpec { name: "m", domain: RANGE_M }], move |p| {
        Ok(Construction::pyramid(Reeve(m(p)), k))
    })
}

/// `Pyr^k(T_m) × Cube(n, n)`.
pub fn pyr_cube(k: u32, n: u32) -> Template {
    Template::new(format!("pyr-cube:{k},{n}"), vec![ParamSpec { name: "m", domain: RANGE_M }], move |p| {
        Ok(Construction::product(Construction::pyramid(Reeve(m(p)), k), Cube { side: n as u64, dim: n }))
    })
}

/// `Pyr(T_m)` followed by `d - 4` steps `P ↦ rP × [0,1]`.
fn chain(m: u64, r: u64, d: usize) -> Construction {
    let mut c = Construction::pyramid(Reeve(m), 1);
    for _ in 4..d {
        c = Construction::product(Construction::dilate(r, c), Interval(1));
    }
    c
}

pub fn f_chain(d: usize) -> Result<Template> {
    if d < 4 {
        return Err(Error::InvalidParameter(format!("chain starts in dimension 4, got {d}")));
    }
    let mut params = vec![tail_ladder("m", 1)];
    if d > 4 {
        params.push(tail_ladder("r", 1));
    }
    Ok(Template::new(format!("f-chain:{d}"), params, move |p| {
        Ok(chain(p["m"], p.get("r").copied().unwrap_or(1), d))
    }))
}

/// `Q × Cube(b, n)` with `Q` the `k`-dimensional chain, `b >= n`.
pub fn q_cube(k: usize, n: u32) -> Result<Template> {
    if k < 4 || n == 0 {
        return Err(Error::InvalidParameter(format!("need k >= 4 and n >= 1, got k = {k}, n = {n}")));
    }
    let mut params = vec![tail_ladder("m", 1)];
    if k > 4 {
        params.push(tail_ladder("r", 1));
    }
    params.push(tail_ladder("b", n as u64));
    Ok(Template::new(format!("q-cube:{k},{n}"), params, move |p| {
        let q = chain(p["m"], p.get("r").copied().unwrap_or(1), k);
        Ok(Construction::product(q, Cube { side: p["b"], dim: n }))
    }))
}

pub fn cube(side: u64, dim: u32) -> Template {
    Template::new(format!("cube:{side},{dim}"), vec![], move |_| Ok(Cube { side, dim }))
}

fn nums<T: std::str::FromStr>(s: &str, count: usize) -> Result<Vec<T>> {
    let v = s.split(',').map(|x| x.trim().parse::<T>()).collect::<std::result::Result<Vec<_>, _>>();
    match v {
        Ok(v) if v.len() == count => Ok(v),
        _ => Err(Error::InvalidInput(format!("expected {count} comma-separated integers, got {s:?}"))),
    }
}

pub(super) fn by_name(name: &str) -> Result<Template> {
    let (head, args) = name.split_once(':').unwrap_or((name, ""));
    match head {
        "reeve" if args.is_empty() => Ok(reeve()),
        "pyr" => Ok(pyr(nums(args, 1)?[0])),
        "pyr-cube" => {
            let v = nums::<u32>(args, 2)?;
            Ok(pyr_cube(v[0], v[1]))
        }
        "f-chain" => f_chain(nums(args, 1)?[0]),
        "q-cube" => {
            let v = nums::<usize>(args, 2)?;
            q_cube(v[0], v[1] as u32)
        }
        "cube" => {
            let v = nums::<u64>(args, 2)?;
            Ok(cube(v[0], v[1] as u32))
        }
        _ => Err(Error::InvalidInput(format!(
            "unknown template {name:?}; known: reeve, pyr:K, pyr-cube:K,N, f-chain:D, q-cube:K,N, cube:S,N"
        ))),
    }
}

/// Top `beta` middle coefficients positive, the rest negative.
pub fn tail_pattern(beta: usize, d: usize) -> Result<SignPattern> {
    if beta == 0 || d < beta + 2 {
        return Err(Error::InvalidParameter(format!("need beta >= 1 and d >= beta + 2, got ({beta}, {d})")));
    }
    let middle = (1..=d - 2).map(|j| if j + beta + 1 >= d { Sign::Plus } else { Sign::Minus }).collect();
    SignPattern::new(d, middle)
}

fn ladder_m(t: Template) -> Template {
    t.with_domain("m", Domain::Ladder { lo: 1, hi: TAIL_BOUNDS[0].1 })
}

/// A `d`-dimensional witness whose top `beta` middle coefficients are
/// positive and the others negative.
pub fn construct_tail_pattern(beta: usize, d: usize) -> Result<Witness> {
    let target = tail_pattern(beta, d)?;
    let template = if d == beta + 2 {
        cube(d as u64, d as u32)
    } else if d == beta + 3 {
        return Err(Error::Unsupported(format!(
            "({beta}, {d}): only the linear coefficient is negative; realized by a construction from prior work \
             that is not rebuilt here"
        )));
    } else if d == beta + 4 {
        f_chain(d)?
    } else if beta <= 2 && d >= 7 {
        ladder_m(pyr_cube(beta as u32, (d - beta - 3) as u32))
    } else if beta >= 3 {
        q_cube(beta + 4, (d - beta - 4) as u32)?
    } else {
        return Err(Error::Unsupported(format!(
            "({beta}, {d}): dimensions up to 6 are covered by a prior classification \
             that is not rebuilt here"
        )));
    };
    match Searcher::default().find_witness(&template, &target, &Bounds::new())? {
        Outcome::Found(w) => Ok(w),
        Outcome::NotFound { bounds, .. } => Err(Error::ResourceLimit(format!(
            "no witness for ({beta}, {d}) with template {} within {bounds:?}",
            template.name()
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ehrhart::ehrhart;
    use crate::patterns::middle_pattern;
    use crate::search::find_witness;

    #[test]
    fn tail_patterns() {
        assert_eq!(tail_pattern(1, 7).unwrap().to_desc(), "+----");
        assert_eq!(tail_pattern(3, 5).unwrap().to_desc(), "+++");
        assert_eq!(tail_pattern(2, 9).unwrap().to_desc(), "++-----");
        assert!(tail_pattern(3, 4).is_err());
    }

    #[test]
    fn tail_dispatch() {
        let w = construct_tail_pattern(3, 5).unwrap();
        assert_eq!(w.construction, Cube { side: 5, dim: 5 });
        assert_eq!(w.pattern.to_desc(), "+++");

        let w = construct_tail_pattern(1, 7).unwrap();
        assert_eq!(w.template, "pyr-cube:1,3");
        assert_eq!(w.pattern, tail_pattern(1, 7).unwrap());

        assert!(matches!(construct_tail_pattern(4, 7), Err(Error::Unsupported(_))));
        assert!(matches!(construct_tail_pattern(1, 6), Err(Error::Unsupported(_))));
    }

    #[test]
    fn tail_grid() {
        for d in 5..=10 {
            for beta in 1..=d - 2 {
                match construct_tail_pattern(beta, d) {
                    Ok(w) => {
                        let p = ehrhart(&w.construction).unwrap();
                        assert_eq!(middle_pattern(&p).unwrap(), tail_pattern(beta, d).unwrap(), "({beta}, {d})");
                    }
                    Err(Error::Unsupported(_)) => assert!(d == beta + 3 || (beta, d) == (1, 6)),
                    Err(e) => panic!("({beta}, {d}): {e}"),
                }
            }
        }
    }

    #[test]
    fn q_cube_layout() {
        for n in 1..=3u32 {
            for k in 4..=5usize {
                let t = q_cube(k, n).unwrap();
                let target = tail_pattern(k - 4, n as usize + k).unwrap_or_else(|_| {
                    // k = 4: no positive middle coefficient
                    SignPattern::new(n as usize + k, vec![Sign::Minus; n as usize + k - 2]).unwrap()
                });
                let w = find_witness(&t, &target, &Bounds::new()).unwrap().into_witness().unwrap();
                let nn = n as usize;
                for j in 1..=nn + 2 {
                    assert_eq!(w.pattern.c(j), Sign::Minus);
                }
                for j in nn + 3..=nn + k - 2 {
                    assert_eq!(w.pattern.c(j), Sign::Plus);
                }
            }
        }
    }

    #[test]
    fn names() {
        for n in ["reeve", "pyr:2", "pyr-cube:3,6", "f-chain:6", "q-cube:5,2", "cube:4,4"] {
            assert_eq!(Template::by_name(n).unwrap().name(), n);
        }
        assert!(Template::by_name("pyr-cube:3").is_err());
        assert!(Template::by_name("nope").is_err());
    }
}

//! Dual pairs `(O_N, sp_2m)` and `(Sp_N, so_2m)` acting on polynomials in an
//! `m x N` matrix: the images of the two centres are related by explicit
//! generating-function identities.

use capelli_core::genfun::{
    alpha_roots, beta_roots, central_elements, check_ladder_transfer, check_series_transfer, dual_combination, ladder,
    Kind, Operators, Route,
};
use capelli_core::weyl::{expect_ops_eq, OperatorRep, WeylContext};
use capelli_core::{Error, Family, LieContext, PbwAlgebra, Ring, WeylOperator};

use super::{algebra, Run};
use crate::params::UsageError;

/// Everything one `(g, m)` pair needs: `γ` images of the series of `g` and
/// `γ'` images of the dual series.
struct Pair {
    ctx: WeylContext,
    g: PbwAlgebra,
    dual: PbwAlgebra,
    gamma: OperatorRep,
    gamma_dual: OperatorRep,
}

impl Pair {
    fn new(family: Family, big_n: usize, m: usize) -> capelli_core::Result<Pair> {
        let g = algebra(LieContext::new(family, big_n))?;
        let dual_family = if family == Family::So { Family::Sp } else { Family::So };
        let dual = algebra(LieContext::new(dual_family, 2 * m))?;
        let gamma = OperatorRep::polarization(&g, m)?;
        let gamma_dual = OperatorRep::dual(&dual, family, g.context().index())?;
        Ok(Pair { ctx: gamma.context().clone(), g, dual, gamma, gamma_dual })
    }

    fn ring(&self) -> Operators {
        Operators(self.ctx.nv())
    }

    /// `[γ(X), γ'(Y)] = 0` for all generators `X` of `g` and `Y` of `g'`.
    fn check_commutant(&mut self) -> capelli_core::Result<()> {
        let gl = self.g.context().labels().to_vec();
        let dl = self.dual.context().labels().to_vec();
        let mut left = Vec::new();
        for &i in &gl {
            for &j in &gl {
                left.push(((i, j), self.gamma.image(&self.g.generator(i, j)?)));
            }
        }
        for &a in &dl {
            for &b in &dl {
                let y = self.gamma_dual.image(&self.dual.generator(a, b)?);
                for ((i, j), x) in &left {
                    let c = x.times(&y).minus(&y.times(x));
                    if !c.vanishes() {
                        return Err(Error::mismatch(
                            "dual actions commute",
                            format!("[F({i},{j}), F'({a},{b})]: {}", self.ctx.render_op(&c)),
                        ));
                    }
                }
            }
        }
        Ok(())
    }

    fn images(&mut self, dual: bool, xs: &[capelli_core::Element]) -> Vec<WeylOperator> {
        let rep = if dual { &mut self.gamma_dual } else { &mut self.gamma };
        xs.iter().map(|x| rep.image(x)).collect()
    }
}

fn setup_pair(run: &mut Run, name: &str, family: Family, big_n: usize, m: usize) -> Option<Pair> {
    let mut pair = run.setup(format!("{name}/setup"), || Pair::new(family, big_n, m))?;
    run.check(format!("{name}/dual-homomorphism"), || pair.gamma_dual.check_homomorphism(&pair.dual));
    run.check(format!("{name}/actions-commute"), || pair.check_commutant());
    Some(pair)
}

struct SoSeries {
    pair: Pair,
    c: Vec<WeylOperator>,
    c_dual: Vec<WeylOperator>,
}

/// `γ(C_1..C_n)` and `γ'(C'_1..C'_m)`; `C'` comes from inverting the
/// Hafnian series of `sp_2m`, and is cross-checked against fusion.
fn so_series(run: &mut Run, big_n: usize, m: usize) -> Option<(String, SoSeries)> {
    let name = format!("so_{big_n}/m={m}");
    let mut pair = setup_pair(run, &name, Family::So, big_n, m)?;
    let cap = run.p.max_cells;
    let n = pair.g.context().n();
    let c = run.setup(format!("{name}/c_k"), || central_elements(&pair.g, Kind::C, n, Route::Explicit, cap))?;
    let c_dual = run.setup(format!("{name}/c'_k"), || central_elements(&pair.dual, Kind::C, m, Route::Inversion, cap))?;
    // fusion in sp_2m is cheap only for m = 1
    if m == 1 {
        run.check(format!("{name}/c'_k-inversion-equals-fusion"), || {
            let f = central_elements(&pair.dual, Kind::C, m, Route::Fusion, cap)?;
            for (k, (a, b)) in c_dual.iter().zip(&f).enumerate() {
                pair.dual.expect_eq(&format!("C'_{}", k + 1), a, b)?;
            }
            Ok(())
        });
    }
    let c = pair.images(false, &c);
    let c_dual = pair.images(true, &c_dual);
    Some((name, SoSeries { pair, c, c_dual }))
}

pub(super) fn so_transfer(run: &mut Run) -> Result<(), UsageError> {
    let ns = run.p.n_range(2..=4, 2..=4)?;
    let ms = run.p.m_range(1..=2, 1..=3)?;
    run.param("N", &ns);
    run.param("m", &ms);
    for &big_n in &ns {
        for &m in &ms {
            let Some((name, s)) = so_series(run, big_n, m) else { continue };
            run.check(format!("{name}/alpha-c-equals-c'"), || {
                let (an, ad) = alpha_roots(big_n, m);
                let rx = ladder(s.pair.g.context(), Kind::C, s.c.len())?;
                let ry = ladder(s.pair.dual.context(), Kind::C, m)?;
                check_ladder_transfer(&s.pair.ring(), (&an, &ad), &s.c, &rx, &s.c_dual, &ry)
            });
        }
    }
    Ok(())
}

pub(super) fn so_combination(run: &mut Run) -> Result<(), UsageError> {
    let ns = run.p.n_range(2..=4, 2..=4)?;
    let ms = run.p.m_range(1..=2, 1..=3)?;
    run.param("N", &ns);
    run.param("m", &ms);
    for &big_n in &ns {
        for &m in &ms {
            let Some((name, s)) = so_series(run, big_n, m) else { continue };
            let ring = s.pair.ring();
            let ctx = &s.pair.ctx;
            for k in 1..=m {
                run.check(format!("{name}/k={k}/c'_k-combination"), || {
                    let rhs = dual_combination(&ring, Family::So, k, &s.c, m, big_n)?;
                    expect_ops_eq(ctx, "gamma'(C'_k) = sum_l f_kl gamma(C_l)", &s.c_dual[k - 1], &rhs)
                });
            }
            let n = big_n / 2;
            if big_n % 2 == 0 && m > n {
                for k in n + 1..=m {
                    run.check(format!("{name}/k={k}/vanishing-corollary"), || {
                        expect_ops_eq(ctx, "gamma'(C'_k) = 0 for k > n", &s.c_dual[k - 1], &ring_zero(&ring))
                    });
                }
            }
            if big_n % 2 == 0 && m + 1 == n {
                for k in 1..=m {
                    run.check(format!("{name}/k={k}/equality-corollary"), || {
                        expect_ops_eq(ctx, "gamma'(C'_k) = gamma(C_k) for m = n-1", &s.c_dual[k - 1], &s.c[k - 1])
                    });
                }
            }
        }
    }
    Ok(())
}

fn ring_zero(ring: &Operators) -> WeylOperator {
    WeylOperator::zero(ring.0)
}

struct SpSeries {
    pair: Pair,
    d: Vec<WeylOperator>,
    d_dual: Vec<WeylOperator>,
}

/// `γ(D_1..D_K)` from Hafnians and `γ'(D'_1..D'_K)` from inverting the
/// Pfaffian series of `so_2m`.
fn sp_series(run: &mut Run, big_n: usize, m: usize, order: usize) -> Option<(String, SpSeries)> {
    let name = format!("sp_{big_n}/m={m}");
    let mut pair = setup_pair(run, &name, Family::Sp, big_n, m)?;
    let cap = run.p.max_cells;
    let d = run.setup(format!("{name}/d_k"), || central_elements(&pair.g, Kind::D, order, Route::Explicit, cap))?;
    let d_dual =
        run.setup(format!("{name}/d'_k"), || central_elements(&pair.dual, Kind::D, order, Route::Inversion, cap))?;
    let d = pair.images(false, &d);
    let d_dual = pair.images(true, &d_dual);
    Some((name, SpSeries { pair, d, d_dual }))
}

fn sp_ranges(run: &mut Run) -> Result<(Vec<usize>, Vec<usize>, usize), UsageError> {
    let ns = run.p.even_n_range(&[2, 4], 4)?;
    let ms = run.p.m_range(1..=2, 1..=3)?;
    let order = run.p.big_k(2, 1..=3)?;
    run.param("N", &ns);
    run.param("m", &ms);
    run.param("K", order);
    Ok((ns, ms, order))
}

pub(super) fn sp_transfer(run: &mut Run) -> Result<(), UsageError> {
    let (ns, ms, order) = sp_ranges(run)?;
    for &big_n in &ns {
        for &m in &ms {
            let Some((name, s)) = sp_series(run, big_n, m, order) else { continue };
            run.check(format!("{name}/beta-d-equals-d'"), || {
                let (bn, bd) = beta_roots(big_n / 2, m);
                let rx = ladder(s.pair.g.context(), Kind::D, order)?;
                let ry = ladder(s.pair.dual.context(), Kind::D, order)?;
                check_series_transfer(&s.pair.ring(), (&bn, &bd), &s.d, &rx, &s.d_dual, &ry, order)
            });
        }
    }
    Ok(())
}

pub(super) fn sp_combination(run: &mut Run) -> Result<(), UsageError> {
    let (ns, ms, order) = sp_ranges(run)?;
    for &big_n in &ns {
        for &m in &ms {
            let Some((name, s)) = sp_series(run, big_n, m, order) else { continue };
            let ring = s.pair.ring();
            let ctx = &s.pair.ctx;
            for k in 1..=order {
                run.check(format!("{name}/k={k}/d'_k-combination"), || {
                    let rhs = dual_combination(&ring, Family::Sp, k, &s.d, m, big_n)?;
                    expect_ops_eq(ctx, "gamma'(D'_k) = sum_l g_kl gamma(D_l)", &s.d_dual[k - 1], &rhs)
                });
            }
            if big_n / 2 + 1 == m {
                for k in 1..=order {
                    run.check(format!("{name}/k={k}/equality-corollary"), || {
                        expect_ops_eq(ctx, "gamma'(D'_k) = gamma(D_k) for n = m-1", &s.d_dual[k - 1], &s.d[k - 1])
                    });
                }
            }
        }
    }
    Ok(())
}


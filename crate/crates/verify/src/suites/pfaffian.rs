//! Pfaffian and Hafnian central elements: centrality, Harish-Chandra images
//! and their images as differential operators.

use capelli_core::combinat::{combinations, multisets, multiplicity_factorials};
use capelli_core::scalar::int;
use capelli_core::symfun::{e_factorial, h_factorial, Partition};
use capelli_core::uea::{hafnian, hafnian_central, pfaffian, pfaffian_central, HcOracle};
use capelli_core::weyl::{expect_ops_eq, omega_split, theta_split, OperatorRep};
use capelli_core::{LieContext, Ring};

use super::{algebra, expect_sym, Run};
use crate::params::UsageError;

pub(super) fn pfaffians(run: &mut Run) -> Result<(), UsageError> {
    let ns = run.p.n_range(2..=4, 2..=4)?;
    let ks = run.p.k_range(1..=2, 1..=3)?;
    let ms = run.p.m_range(1..=3, 1..=3)?;
    run.param("N", &ns);
    run.param("k", &ks);
    run.param("m", &ms);
    for &big_n in &ns {
        let name = format!("so_{big_n}");
        let Some(alg) = run.setup(format!("{name}/setup"), || algebra(LieContext::so(big_n))) else { continue };
        let n = alg.context().n();
        let Some(oracle) = run.setup(format!("{name}/oracle"), || HcOracle::new(&alg)) else { continue };
        let kmax = *ks.iter().max().unwrap();
        run.check(format!("{name}/highest-weight-vectors"), || {
            for lambda in Partition::all(0, 2 * kmax * n, n, 2 * kmax) {
                oracle.check_highest_weight(&lambda)?;
            }
            Ok(())
        });
        let a = alg.context().shift_sequence().expect("orthogonal shift sequence");
        for &k in &ks {
            let Some(ck) = run.setup(format!("{name}/k={k}/build"), || pfaffian_central(&alg, k)) else { continue };
            run.check(format!("{name}/k={k}/central"), || alg.check_central(&ck));
            run.check(format!("{name}/k={k}/hc-image"), || {
                let want = e_factorial(k, n, &a);
                let want = if k % 2 == 1 { want.negate() } else { want };
                expect_sym("HC image of C_k is (-1)^k e_k(l^2|a)", &oracle.hc_polynomial(&ck, k)?, &want, n)
            });
        }
        let labels = alg.context().labels().to_vec();
        for &m in &ms {
            let Some(mut rep) = run.setup(format!("{name}/m={m}/setup"), || OperatorRep::polarization(&alg, m)) else {
                continue;
            };
            let ctx = rep.context().clone();
            for &k in ks.iter().filter(|k| 2 * **k <= big_n) {
                run.check(format!("{name}/m={m}/k={k}/pfaffian-image"), || {
                    for c in combinations(labels.len(), 2 * k) {
                        let seq: Vec<i32> = c.iter().map(|p| labels[*p]).collect();
                        let lhs = rep.image(&pfaffian(&alg, &seq)?);
                        let mut rhs = ctx.zero_op();
                        for rows in combinations(m, k) {
                            let rows: Vec<usize> = rows.iter().map(|r| r + 1).collect();
                            rhs = rhs.plus(&omega_split(&ctx, &rows, &seq)?);
                        }
                        expect_ops_eq(&ctx, &format!("image of Phi_{seq:?}"), &lhs, &rhs)?;
                    }
                    Ok(())
                });
            }
        }
    }
    Ok(())
}

pub(super) fn hafnians(run: &mut Run) -> Result<(), UsageError> {
    let ns = run.p.even_n_range(&[2, 4], 4)?;
    let ks = run.p.k_range(1..=2, 1..=3)?;
    let ms = run.p.m_range(1..=2, 1..=3)?;
    run.param("N", &ns);
    run.param("k", &ks);
    run.param("m", &ms);
    for &big_n in &ns {
        let name = format!("sp_{big_n}");
        let Some(alg) = run.setup(format!("{name}/setup"), || algebra(LieContext::sp(big_n))) else { continue };
        let n = alg.context().n();
        let Some(oracle) = run.setup(format!("{name}/oracle"), || HcOracle::new(&alg)) else { continue };
        let kmax = *ks.iter().max().unwrap();
        run.check(format!("{name}/highest-weight-vectors"), || {
            for lambda in Partition::all(0, 2 * kmax * n, n, 2 * kmax) {
                oracle.check_highest_weight(&lambda)?;
            }
            Ok(())
        });
        let a = alg.context().shift_sequence().expect("symplectic shift sequence");
        for &k in &ks {
            let Some(dk) = run.setup(format!("{name}/k={k}/build"), || hafnian_central(&alg, k)) else { continue };
            run.check(format!("{name}/k={k}/central"), || alg.check_central(&dk));
            run.check(format!("{name}/k={k}/hc-image"), || {
                expect_sym("HC image of D_k is h_k(l^2|a)", &oracle.hc_polynomial(&dk, k)?, &h_factorial(k, n, &a), n)
            });
        }
        let labels = alg.context().labels().to_vec();
        for &m in &ms {
            let Some(mut rep) = run.setup(format!("{name}/m={m}/setup"), || OperatorRep::polarization(&alg, m)) else {
                continue;
            };
            let ctx = rep.context().clone();
            for &k in &ks {
                run.check(format!("{name}/m={m}/k={k}/hafnian-image"), || {
                    for c in multisets(labels.len(), 2 * k) {
                        let seq: Vec<i32> = c.iter().map(|p| labels[*p]).collect();
                        let lhs = rep.image(&hafnian(&alg, &seq)?);
                        let mut rhs = ctx.zero_op();
                        for rows in multisets(m, k) {
                            let w = int(1) / int(multiplicity_factorials(&rows) as i64);
                            let rows: Vec<usize> = rows.iter().map(|r| r + 1).collect();
                            rhs = rhs.plus(&theta_split(&ctx, &rows, &seq)?.scaled(&w));
                        }
                        expect_ops_eq(&ctx, &format!("image of Psi_{seq:?}"), &lhs, &rhs)?;
                    }
                    Ok(())
                });
            }
        }
    }
    Ok(())
}

pub(super) fn full_pfaffian(run: &mut Run) -> Result<(), UsageError> {
    let ns = run.p.even_n_range(&[2, 4], 4)?;
    run.param("N", &ns);
    for &big_n in &ns {
        let name = format!("so_{big_n}");
        let Some(alg) = run.setup(format!("{name}/setup"), || algebra(LieContext::so(big_n))) else { continue };
        let n = big_n / 2;
        run.check(format!("{name}/c_n-square"), || {
            let labels = alg.context().labels().to_vec();
            let pf = pfaffian(&alg, &labels)?;
            let sq = alg.mul(&pf, &pf);
            let sq = if n % 2 == 1 { sq.negate() } else { sq };
            alg.expect_eq("C_n = (-1)^n Pf^2", &pfaffian_central(&alg, n)?, &sq)
        });
    }
    Ok(())
}

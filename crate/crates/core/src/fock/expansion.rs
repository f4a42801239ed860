use super::FockVector;
use crate::combinatorics::{std_relative_all, Multicharge, Multipartition, RelativeMode};
use crate::error::Result;
use crate::laurent::LaurentPoly;
use crate::roots::content;

fn relative_expansion(
    mu: &Multipartition,
    mc: &Multicharge,
    mode: RelativeMode,
) -> Result<FockVector> {
    mc.require_standing_assumption(mu.size())?;
    let base = mode.reference(mu).degree(mc);
    let mut v = FockVector::zero(content(mu, mc));
    for s in std_relative_all(mu, mode, mc) {
        v.add_to(s.shape(), &LaurentPoly::monomial(1, s.degree(mc) - base));
    }
    Ok(v)
}

/// `[Z^mu] = sum_{s in Std^mu(lambda)} q^{deg s - deg t^mu} [Delta^lambda]`.
///
/// The support lies in `{lambda : lambda ⊵ mu}` and the coefficient of
/// `[Delta^mu]` is 1.
pub fn zmu_expansion(mu: &Multipartition, mc: &Multicharge) -> Result<FockVector> {
    relative_expansion(mu, mc, RelativeMode::Upper)
}

/// `[E^mu] = sum_{s in Std_mu(lambda)} q^{deg s - deg t_mu} [Delta^lambda]`.
///
/// Every `s` in `Std_mu(lambda)` is dominated by `t_mu`, so the support lies
/// in `{lambda : mu ⊵ lambda}`.
pub fn emu_expansion(mu: &Multipartition, mc: &Multicharge) -> Result<FockVector> {
    relative_expansion(mu, mc, RelativeMode::Lower)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::roots::blocks;

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    fn lp(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn zmu_defect_four_example() {
        let mc = Multicharge::parse("0,0,0", 0).unwrap();
        let z = zmu_expansion(&mp("4,1|1|1"), &mc).unwrap();
        assert_eq!(z.len(), 3);
        assert_eq!(z.coeff(&mp("4,1|1|1")), lp("1"));
        assert_eq!(z.coeff(&mp("4,2|-|1")), lp("q"));
        assert_eq!(z.coeff(&mp("4,2|1|-")), lp("q^2 + 1"));
    }

    #[test]
    fn zmu_small() {
        let mc = Multicharge::parse("0,0", 0).unwrap();
        let z = zmu_expansion(&mp("-|1"), &mc).unwrap();
        assert_eq!(z.coeff(&mp("-|1")), lp("1"));
        assert_eq!(z.coeff(&mp("1|-")), lp("q"));
        let top = zmu_expansion(&mp("1|-"), &mc).unwrap();
        assert_eq!(top, FockVector::standard(top.block().clone(), mp("1|-")));
    }

    #[test]
    fn emu_small() {
        // Std_{(1|-)} contains t_mu and the one-box tableau in component 2,
        // of degrees 1 and 0.
        let mc = Multicharge::parse("0,0", 0).unwrap();
        let e = emu_expansion(&mp("1|-"), &mc).unwrap();
        assert_eq!(e.coeff(&mp("1|-")), lp("1"));
        assert_eq!(e.coeff(&mp("-|1")), lp("q^-1"));
        let bottom = emu_expansion(&mp("-|1"), &mc).unwrap();
        assert_eq!(bottom.len(), 1);
        assert_eq!(bottom.coeff(&mp("-|1")), lp("1"));
    }

    #[test]
    fn supports_are_triangular() {
        let mc = Multicharge::parse("0,1,0", 0).unwrap();
        for b in blocks(4, &mc).unwrap() {
            for mu in &b.members {
                let z = zmu_expansion(mu, &mc).unwrap();
                assert!(z.coeff(mu).is_one());
                assert!(z
                    .support()
                    .all(|l| l.dominates_unchecked(mu) && b.contains(l)));
                let e = emu_expansion(mu, &mc).unwrap();
                assert!(e.coeff(mu).is_one());
                assert!(e
                    .support()
                    .all(|l| mu.dominates_unchecked(l) && b.contains(l)));
            }
            let top = &b.members[0];
            assert_eq!(zmu_expansion(top, &mc).unwrap().len(), 1);
            let bottom = b.members.last().unwrap();
            assert_eq!(emu_expansion(bottom, &mc).unwrap().len(), 1);
        }
    }

    #[test]
    fn refuses_small_e() {
        let mc = Multicharge::parse("0,0", 2).unwrap();
        assert!(matches!(
            zmu_expansion(&mp("2,1|-"), &mc),
            Err(Error::Unsupported(_))
        ));
    }
}

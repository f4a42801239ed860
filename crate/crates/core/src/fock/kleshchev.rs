use super::GradedMatrix;
use crate::combinatorics::{Multicharge, Multipartition};
use crate::error::{Error, Result};

/// Kleshchev test for the linear quiver with a weakly decreasing charge:
/// `mu^(l)_{r + k_l - k_{l+1}} <= mu^(l+1)_r` for all `l < level` and `r >= 1`.
pub fn is_kleshchev(mu: &Multipartition, mc: &Multicharge) -> Result<bool> {
    if mc.e() != 0 {
        return Err(Error::Unsupported(format!(
            "Kleshchev detection needs e = 0, got e = {}",
            mc.e()
        )));
    }
    if !mc.is_weakly_decreasing() {
        return Err(Error::Unsupported(format!(
            "Kleshchev detection needs a weakly decreasing charge, got {mc}"
        )));
    }
    if mu.level() != mc.level() {
        return Err(Error::SizeMismatch(format!(
            "{mu} has the wrong level for {mc}"
        )));
    }
    let kappa = mc.kappa();
    for l in 1..mu.level() {
        let shift = (kappa[l - 1] - kappa[l]) as usize;
        let upper = mu.components()[l - 1].len();
        for r in 1..=upper.saturating_sub(shift) {
            if mu.part(l, r + shift) > mu.part(l + 1, r) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The columns of `d` labelled by Kleshchev multipartitions.
pub fn hecke_submatrix(d: &GradedMatrix, mc: &Multicharge) -> Result<GradedMatrix> {
    let mut keep = Vec::with_capacity(d.cols().len());
    for mu in d.cols() {
        keep.push(is_kleshchev(mu, mc)?);
    }
    let mut flags = keep.into_iter();
    Ok(d.select_columns(|_| flags.next().unwrap_or(false)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::block_containing;

    fn mp(s: &str) -> Multipartition {
        s.parse().unwrap()
    }

    #[test]
    fn small_cases() {
        let mc = Multicharge::parse("0,0", 0).unwrap();
        for n in 1..5 {
            let bottom = Multipartition::new(vec![vec![], vec![n]]).unwrap();
            let top = Multipartition::new(vec![vec![n], vec![]]).unwrap();
            assert!(is_kleshchev(&bottom, &mc).unwrap());
            assert!(!is_kleshchev(&top, &mc).unwrap());
        }
        assert!(is_kleshchev(&mp("-|-"), &mc).unwrap());
    }

    #[test]
    fn defect_four_block() {
        let mc = Multicharge::parse("0,0,0", 0).unwrap();
        let b = block_containing(&mp("4,1|1|1"), &mc).unwrap();
        let found: Vec<_> = b
            .members
            .iter()
            .filter(|m| is_kleshchev(m, &mc).unwrap())
            .cloned()
            .collect();
        assert_eq!(found, vec![mp("1|1|4,1"), mp("-|1|4,2")]);
    }

    #[test]
    fn shifted_charge() {
        let mc = Multicharge::parse("2,0", 0).unwrap();
        assert!(is_kleshchev(&mp("1,1|-"), &mc).unwrap());
        assert!(!is_kleshchev(&mp("1,1,1|-"), &mc).unwrap());
        assert!(is_kleshchev(&mp("1,1,1|1"), &mc).unwrap());
    }

    #[test]
    fn refuses_outside_scope() {
        let unsorted = Multicharge::parse("0,1", 0).unwrap();
        assert!(matches!(
            is_kleshchev(&mp("1|-"), &unsorted),
            Err(Error::Unsupported(_))
        ));
        let cyclic = Multicharge::parse("0,0", 5).unwrap();
        assert!(matches!(
            is_kleshchev(&mp("1|-"), &cyclic),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn level_one_keeps_everything() {
        let mc = Multicharge::parse("0", 0).unwrap();
        let labels = vec![mp("1,1,1"), mp("2,1"), mp("3")];
        let d = GradedMatrix::identity(labels);
        assert_eq!(hecke_submatrix(&d, &mc).unwrap(), d);
    }
}

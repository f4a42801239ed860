use quiver_schur::combinatorics::{Multicharge, Multipartition};
use quiver_schur::fock::{
    cartan_matrix, emu_expansion, hecke_submatrix, level2_decomposition, straighten_canonical,
    straighten_tilting, zmu_expansion, GradedMatrix,
};
use quiver_schur::oracle::zmu_by_filter;
use quiver_schur::roots::{block_containing, blocks};
use quiver_schur::LaurentPoly;

fn mp(s: &str) -> Multipartition {
    s.parse().unwrap()
}

fn lp(s: &str) -> LaurentPoly {
    s.parse().unwrap()
}

fn level_two(kappa: &str) -> Multicharge {
    Multicharge::parse(kappa, 0).unwrap()
}

#[test]
fn single_box_block_matrices() {
    let mc = level_two("0,0");
    let b = block_containing(&mp("1|-"), &mc).unwrap();
    let d = straighten_canonical(&b, &mc).unwrap().matrix;

    let c = cartan_matrix(&d);
    assert_eq!(c.get(&mp("-|1"), &mp("-|1")), lp("1 + q^2"));
    assert_eq!(c.get(&mp("-|1"), &mp("1|-")), lp("q"));
    assert_eq!(c.get(&mp("1|-"), &mp("1|-")), lp("1"));

    let h = hecke_submatrix(&d, &mc).unwrap();
    assert_eq!(h.cols(), &[mp("-|1")]);
    assert_eq!(h.get(&mp("1|-"), &mp("-|1")), lp("q"));
    assert_eq!(h.get(&mp("-|1"), &mp("-|1")), lp("1"));
}

#[test]
fn emu_single_box_matches_filtered_enumeration() {
    let mc = level_two("0,0");
    let e = emu_expansion(&mp("1|-"), &mc).unwrap();
    assert_eq!(e.coeff(&mp("1|-")), lp("1"));
    assert_eq!(e.coeff(&mp("-|1")), lp("q^-1"));
}

#[test]
fn generator_matches_filter_for_z() {
    for kappa in ["0,0", "0,2", "0,0,0", "1,0,-1"] {
        let mc = Multicharge::parse(kappa, 0).unwrap();
        for b in blocks(5, &mc).unwrap() {
            for mu in &b.members {
                assert_eq!(zmu_expansion(mu, &mc).unwrap(), zmu_by_filter(mu, &b, &mc));
            }
        }
    }
}

#[test]
fn tilting_is_bar_of_conjugate_decomposition_small() {
    let mc = level_two("0,0");
    let dual = mc.conjugate();
    for b in blocks(3, &mc).unwrap() {
        let t = straighten_tilting(&b, &mc).unwrap().matrix;
        let d = straighten_canonical(&b.conjugate(&mc), &dual)
            .unwrap()
            .matrix;
        for lambda in &b.members {
            for mu in &b.members {
                assert_eq!(
                    t.get(mu, lambda),
                    d.get(&mu.conjugate(), &lambda.conjugate()).bar()
                );
            }
        }
    }
}

#[test]
fn level_two_frozen_block() {
    let mc = level_two("0,1");
    let b = block_containing(&mp("1|1"), &mc).unwrap();
    let d = level2_decomposition(&b, &mc).unwrap();
    assert_eq!(d.rows(), &[mp("-|1,1"), mp("1|1"), mp("2|-")]);
    let expected = GradedMatrix::from_json_value(&serde_json::json!({
        "rows": ["(-|1,1)", "(1|1)", "(2|-)"],
        "cols": ["(-|1,1)", "(1|1)", "(2|-)"],
        "entries": [["1", "0", "0"], ["q", "1", "0"], ["0", "q", "1"]]
    }))
    .unwrap();
    assert_eq!(d, expected);
    assert_eq!(straighten_canonical(&b, &mc).unwrap().matrix, expected);
}

//! Properties of the faithful-pair construction and the Springer layer underneath it.

use nilorb::duality::{d_a_triv, d_ls};
use nilorb::faithful::{alpha_one, faithful_pair, is_edge_case, pi_mu, springer_fiber, EdgeReason, Provenance};
use nilorb::partitions::{dual, enumerate, is_special};
use nilorb::springer::{
    family_members, family_of, j_induce, restriction_multiplicity, special_rep, springer_rep, springer_support,
    springer_symbol, PseudoLeviShape, Side, WeylIrrep,
};
use nilorb::symbols::{refinement, shriek_rows, BlockKind};
use nilorb::{DecoratedPartition, Letter, LieType, Partition};

const LETTERS: [Letter; 3] = [Letter::B, Letter::C, Letter::D];

fn orbits(x: Letter, n: usize) -> Vec<Partition> {
    enumerate(LieType::new(x, n)).unwrap().into_iter().filter(|o| o.kappa == 0).map(|o| o.partition).collect()
}

fn p(s: &str) -> Partition {
    s.parse().unwrap()
}

#[test]
fn fibres_from_flips_match_a_full_scan() {
    for x in LETTERS {
        for n in 1..=5 {
            let all = WeylIrrep::all(x, n);
            for lambda in enumerate(LieType::new(x.dual(), n)).unwrap() {
                let mut fibre = springer_fiber(&lambda, x).unwrap();
                let mut scan: Vec<WeylIrrep> = all
                    .iter()
                    .filter(|e| springer_support(e, Side::Dual).unwrap() == lambda)
                    .cloned()
                    .collect();
                fibre.sort();
                scan.sort();
                assert_eq!(fibre, scan, "{x}{n}: fibre over {lambda}");
            }
        }
    }
}

#[test]
fn every_representation_has_exactly_one_support() {
    for x in LETTERS {
        for n in 1..=5 {
            let total: usize = enumerate(LieType::new(x.dual(), n))
                .unwrap()
                .iter()
                .map(|l| springer_fiber(l, x).unwrap().len())
                .sum();
            assert_eq!(total, WeylIrrep::all(x, n).len(), "{x}{n}");
        }
    }
}

#[test]
fn markings_are_contained_and_factorwise_special() {
    for x in LETTERS {
        for n in 1..=6 {
            for lambda in orbits(x.dual(), n) {
                let d = dual(&lambda, x.dual()).unwrap();
                let (pi, mu) = pi_mu(&lambda, x).unwrap();
                assert!(mu.contains(&pi) && d.contains(&mu), "{x}: λ = {lambda}, π = {pi}, μ = {mu}");
                let rest = mu.subtract(&pi).unwrap();
                assert!(rest.distinct_parts().iter().all(|&(_, m)| m % 2 == 0));
                if is_edge_case(&lambda, x).unwrap().is_some() {
                    continue;
                }
                let pair = faithful_pair(&DecoratedPartition::plain(lambda.clone()), x).unwrap();
                if pair.provenance != Provenance::GeneralConstruction {
                    continue;
                }
                let (t1, t2) = pair.shape.factors();
                assert!(is_special(&pair.orbit.first, t1.letter).unwrap(), "{x}: {lambda} gives {}", pair.orbit);
                assert!(is_special(&pair.orbit.second, t2.letter).unwrap(), "{x}: {lambda} gives {}", pair.orbit);
            }
        }
    }
}

#[test]
fn edge_cases_are_the_orbits_with_a_degenerate_factor() {
    for x in LETTERS {
        for n in 1..=7 {
            for lambda in orbits(x.dual(), n) {
                let (_, mu) = pi_mu(&lambda, x).unwrap();
                let expected = match x {
                    Letter::C => None,
                    _ if mu.size() == 2 => Some(EdgeReason::FirstFactorTooSmall),
                    Letter::D if mu.size() + 2 == 2 * n => Some(EdgeReason::SecondFactorTooSmall),
                    _ => None,
                };
                assert_eq!(is_edge_case(&lambda, x).unwrap(), expected, "{x}{n}: {lambda}, μ = {mu}");
            }
        }
    }
}

#[test]
fn edge_case_examples() {
    assert!(is_edge_case(&p("3,1"), Letter::D).unwrap().is_some());
    assert_eq!(is_edge_case(&p("1,1"), Letter::D).unwrap(), Some(EdgeReason::SecondFactorTooSmall));
    assert!(is_edge_case(&p("3,1,1"), Letter::B).is_err());
    assert_eq!(is_edge_case(&p("4"), Letter::B).unwrap(), Some(EdgeReason::FirstFactorTooSmall));
    assert_eq!(is_edge_case(&p("3,1,1"), Letter::C).unwrap(), None);
    let pair = faithful_pair(&DecoratedPartition::plain(p("3,1")), Letter::D).unwrap();
    assert_eq!(pair.provenance, Provenance::EdgeCase);
    assert!(pair.shape.is_full());
}

#[test]
fn routing_examples() {
    let pair = faithful_pair(&DecoratedPartition::plain(p("3,3,1")), Letter::C).unwrap();
    assert_eq!(pair.provenance, Provenance::GeneralConstruction);
    assert_eq!(pair.shape, PseudoLeviShape::new(Letter::C, 3, 2).unwrap());
    assert_eq!(pair.orbit.to_string(), "2,2;2");
    let ve = faithful_pair(&"2,2,2,2:1".parse().unwrap(), Letter::D).unwrap();
    assert_eq!(ve.provenance, Provenance::UniqueRepresentation);
    assert_eq!(pi_mu(&p("3,1,1"), Letter::C).unwrap(), (Partition::empty(), Partition::empty()));
    assert_eq!(pi_mu(&p("3,3,1"), Letter::C).unwrap(), (Partition::empty(), p("2,2")));
}

#[test]
fn closed_form_first_factor_matches_the_springer_recipe() {
    let mut checked = 0;
    for x in LETTERS {
        let y = x.factor();
        for n in 1..=6 {
            for lambda in orbits(x.dual(), n) {
                if is_edge_case(&lambda, x).unwrap().is_some() || (x == Letter::D && lambda.is_very_even()) {
                    continue;
                }
                let alpha = alpha_one(&lambda, x).unwrap_or_else(|e| panic!("{x}: α₁({lambda}): {e}"));
                let (_, mu) = pi_mu(&lambda, x).unwrap();
                let reference = springer_symbol(&DecoratedPartition::plain(d_ls(&mu, y).unwrap()), y).unwrap();
                match x {
                    Letter::B => {
                        let r = reference.with_bottom_len(alpha.bottom_len()).unwrap();
                        let (t, b) = shriek_rows(r.top(), r.bottom());
                        let (t2, b2) = shriek_rows(r.bottom(), r.top());
                        let got = (alpha.top().to_vec(), alpha.bottom().to_vec());
                        assert!(got == (t, b) || got == (t2, b2), "B: α₁({lambda}) = {alpha}, reference {r}");
                    }
                    Letter::C => assert_eq!(alpha.normalize(), reference.normalize(), "C: {lambda}"),
                    Letter::D => {
                        let (a, r) = (alpha.normalize(), reference.normalize());
                        assert!(a == r || (a.has_equal_rows() && a.multiset() == r.multiset()), "D: {lambda}");
                    }
                }
                checked += 1;
            }
        }
    }
    assert!(checked > 100);
}

/// The interval blocks of the refinement of `Λ(E(λ, 1))` sit exactly over the runs of
/// parts of `λ'` with the parity `ω_{X∨}` (positions counted from the right).
#[test]
fn refinement_intervals_follow_the_parts_of_lambda() {
    for x in LETTERS {
        let xd = x.dual();
        for n in 1..=6 {
            for lambda in enumerate(LieType::new(xd, n)).unwrap() {
                let e = springer_rep(&lambda, xd).unwrap();
                let len = lambda.partition.len();
                for k in (len / 2 + 1)..=(len / 2 + 2) {
                    let s = e.ssymbol(xd, Some(k)).unwrap();
                    let bar = s.bar();
                    let total = bar.len();
                    let mut parts = vec![0u32];
                    let mut mults = vec![total - len];
                    for (v, m) in lambda.partition.distinct_parts().into_iter().rev() {
                        parts.push(v);
                        mults.push(m);
                    }
                    let q = |i: usize| -> usize { mults.get(i..).map_or(0, |s| s.iter().sum()) };
                    let mut expected: Vec<Vec<u32>> = (0..parts.len())
                        .filter(|&b| parts[b] % 2 == xd.omega())
                        .map(|b| ((q(b + 1) + 1)..=q(b)).rev().map(|j| bar[total - j]).collect())
                        .collect();
                    let mut got: Vec<Vec<u32>> = refinement(&s)
                        .unwrap()
                        .blocks
                        .into_iter()
                        .filter(|b| b.kind == BlockKind::Interval)
                        .map(|b| b.entries)
                        .collect();
                    expected.sort();
                    got.sort();
                    assert_eq!(got, expected, "{xd}: {lambda} at k = {k}");
                }
            }
        }
    }
}

#[test]
fn induced_representations_occur_in_their_restriction() {
    for x in LETTERS {
        for n in 1..=4 {
            for shape in PseudoLeviShape::maximal(x, n) {
                let (t1, t2) = shape.factors();
                let specials = |t: LieType| -> Vec<WeylIrrep> {
                    WeylIrrep::all(t.letter, t.rank).into_iter().filter(|f| f.is_special().unwrap()).collect()
                };
                for f1 in specials(t1) {
                    for f2 in specials(t2) {
                        let e = j_induce(&shape, &f1, &f2).unwrap();
                        if let Ok(m) = restriction_multiplicity(&e, &shape, &f1, &f2) {
                            assert!(m > 0, "{x}{n} on {shape}: {f1} ⊠ {f2} ↦ {e}");
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn each_family_has_one_special_member() {
    for x in LETTERS {
        for n in 1..=5 {
            for e in WeylIrrep::all(x, n) {
                let f = family_of(&e).unwrap();
                let members = family_members(&f).unwrap();
                assert!(members.contains(&e));
                let specials: Vec<_> = members.iter().filter(|m| m.is_special().unwrap()).collect();
                assert_eq!(specials, vec![&special_rep(&f).unwrap()], "{x}{n}: family of {e}");
                let twisted = family_members(&family_of(&e.twisted()).unwrap()).unwrap();
                assert_eq!(twisted.len(), members.len(), "{x}{n}: sign twist of the family of {e}");
            }
        }
    }
}

#[test]
fn trivial_and_sign_supports() {
    for n in 1..=4 {
        let regular = springer_support(&WeylIrrep::trivial(Letter::B, n), Side::Dual).unwrap();
        assert_eq!(regular.partition, Partition::new(vec![2 * n as u32]).unwrap());
        let zero = springer_support(&WeylIrrep::sign(Letter::B, n), Side::Dual).unwrap();
        assert_eq!(zero.partition, Partition::new(vec![1; 2 * n]).unwrap());
        let e = springer_rep(&DecoratedPartition::plain(Partition::new(vec![2 * n as u32 + 1]).unwrap()), Letter::B);
        assert_eq!(e.unwrap(), WeylIrrep::trivial(Letter::B, n));
    }
    let stein = d_a_triv(&Partition::new(vec![1; 5]).unwrap(), Letter::C).unwrap();
    assert_eq!(stein.orbit, p("4"));
}

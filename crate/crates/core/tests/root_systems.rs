use heightfilter_core::dm::rho;
use heightfilter_core::linalg::rat;
use heightfilter_core::{Family, RootSystem, SystemLabel};

fn build(s: &str) -> RootSystem {
    RootSystem::build(s.parse().unwrap()).unwrap()
}

/// Every system of rank at most `max_rank`.
fn systems_up_to(max_rank: usize) -> Vec<RootSystem> {
    let mut labels = Vec::new();
    for r in 1..=max_rank {
        labels.push(SystemLabel::a(r).unwrap());
    }
    for r in 2..=max_rank {
        labels.push(SystemLabel::b(r).unwrap());
        labels.push(SystemLabel::c(r).unwrap());
    }
    for r in 4..=max_rank {
        labels.push(SystemLabel::from_rank(Family::D, r).unwrap());
    }
    for r in 6..=max_rank.min(8) {
        labels.push(SystemLabel::e(r).unwrap());
    }
    if max_rank >= 4 {
        labels.push(SystemLabel::f4());
    }
    labels.push(SystemLabel::g2());
    labels.into_iter().map(|l| RootSystem::build(l).unwrap()).collect()
}

/// Textbook exponents.
fn classical_exponents(label: SystemLabel) -> Vec<i64> {
    let r = label.rank() as i64;
    let mut e: Vec<i64> = match label.family() {
        Family::A => (1..=r).collect(),
        Family::B | Family::C => (1..=r).map(|i| 2 * i - 1).collect(),
        Family::D => (1..r).map(|i| 2 * i - 1).chain([r - 1]).collect(),
        Family::E => match r {
            6 => vec![1, 4, 5, 7, 8, 11],
            7 => vec![1, 5, 7, 9, 11, 13, 17],
            _ => vec![1, 7, 11, 13, 17, 19, 23, 29],
        },
        Family::F => vec![1, 5, 7, 11],
        Family::G => vec![1, 5],
    };
    e.sort_unstable();
    e
}

/// Part `k` of the partition dual to `parts`.
fn dual_part(parts: &[i64], k: i64) -> usize {
    parts.iter().filter(|&&p| p >= k).count()
}

#[test]
fn exponents_match_the_classical_lists() {
    for rs in systems_up_to(8) {
        let mut got = rs.exponents().to_vec();
        got.sort_unstable();
        assert_eq!(got, classical_exponents(rs.label()), "{}", rs.label());
    }
}

#[test]
fn height_counts_are_the_dual_partition_of_exponents() {
    for rs in systems_up_to(12) {
        let exps = classical_exponents(rs.label());
        let h = rs.coxeter_number();
        for k in 1..=h + 2 {
            assert_eq!(rs.pi(k as usize), dual_part(&exps, k), "{} k={k}", rs.label());
        }
        let total: usize = (1..h as usize).map(|k| rs.pi(k)).sum();
        assert_eq!(total, rs.positive_roots().len());
        assert_eq!(2 * total, rs.rank() * h as usize);
        assert_eq!(rs.pi(1), rs.rank());
        assert_eq!(rs.pi(h as usize - 1), 1);
    }
}

#[test]
fn height_counts_of_classical_families() {
    for n in 2..=20usize {
        let a = RootSystem::build(SystemLabel::a(n - 1).unwrap()).unwrap();
        for k in 1..n {
            assert_eq!(a.pi(k), n - k, "A{} k={k}", n - 1);
        }
        let b = RootSystem::build(SystemLabel::b(n).unwrap()).unwrap();
        let c = RootSystem::build(SystemLabel::c(n).unwrap()).unwrap();
        for k in 1..2 * n {
            assert_eq!(b.pi(k), n - k / 2, "B{n} k={k}");
            assert_eq!(c.pi(k), n - k / 2, "C{n} k={k}");
        }
        if n >= 3 {
            let d = RootSystem::build(SystemLabel::d(n).unwrap()).unwrap();
            for k in 1..2 * n {
                let want = if k <= n { n + 1 - k / 2 } else { n - k / 2 };
                assert_eq!(d.pi(k), want, "D{} k={k}", n + 1);
            }
        }
    }
}

#[test]
fn weyl_dimension_vector_is_height() {
    for rs in systems_up_to(12) {
        let rho = rho(&rs);
        for b in rs.positive_roots() {
            assert_eq!(rho.pair(b.coeffs()), rat(b.height()), "{} {:?}", rs.label(), b.coeffs());
        }
    }
}

#[test]
fn root_strings() {
    for rs in systems_up_to(6) {
        let roots: Vec<Vec<i64>> = rs
            .positive_roots()
            .iter()
            .flat_map(|b| [b.coeffs().to_vec(), b.negated().coeffs().to_vec()])
            .collect();
        let shift = |b: &[i64], g: &[i64], i: i64| -> Vec<i64> {
            b.iter().zip(g).map(|(x, y)| x + i * y).collect()
        };
        for beta in &roots {
            for gamma in &roots {
                let neg: Vec<i64> = gamma.iter().map(|x| -x).collect();
                if beta == gamma || *beta == neg {
                    continue;
                }
                let p = (1..).take_while(|&i| rs.is_root(&shift(beta, gamma, -i))).count() as i64;
                let q = (1..).take_while(|&i| rs.is_root(&shift(beta, gamma, i))).count() as i64;
                assert_eq!(p - q, rs.cartan_pairing(beta, gamma).unwrap(), "{}", rs.label());
            }
        }
    }
}

#[test]
fn negation_closed_and_reduced() {
    for rs in systems_up_to(8) {
        for b in rs.positive_roots() {
            assert!(rs.is_root(b.negated().coeffs()));
            let double: Vec<i64> = b.coeffs().iter().map(|x| 2 * x).collect();
            assert!(!rs.is_root(&double));
            assert!(b.coeffs().iter().all(|&c| c >= 0));
            assert_eq!(b.height(), b.coeffs().iter().sum::<i64>());
        }
    }
}

#[test]
fn form_matches_the_epsilon_realization() {
    for rs in systems_up_to(9) {
        let Some(ev) = rs.epsilon_view() else {
            continue;
        };
        let eps: Vec<Vec<i64>> = ev.simple_roots().to_vec();
        let dot = |u: &[i64], v: &[i64]| u.iter().zip(v).map(|(a, b)| a * b).sum::<i64>();
        let longest = eps.iter().map(|u| dot(u, u)).max().unwrap();
        for (i, u) in eps.iter().enumerate() {
            for (j, v) in eps.iter().enumerate() {
                // long roots have squared length 2 in the form
                assert_eq!(
                    rs.sym_form()[i][j] * rat(longest),
                    rat(2 * dot(u, v)),
                    "{} ({i},{j})",
                    rs.label()
                );
            }
        }
        for b in rs.positive_roots() {
            let e = ev.to_epsilon(b.coeffs());
            assert_eq!(dot(&e, &e) == longest, b.is_long(), "{} {:?}", rs.label(), b.coeffs());
        }
    }
}

#[test]
fn cartan_matrices_are_valid() {
    for rs in systems_up_to(10) {
        let a = rs.cartan();
        for (i, row) in a.iter().enumerate() {
            assert_eq!(row[i], 2);
            for (j, &x) in row.iter().enumerate() {
                if i != j {
                    assert!(x <= 0);
                    assert_eq!(x == 0, a[j][i] == 0);
                }
            }
        }
    }
}

#[test]
fn simple_root_heights_and_stated_heights() {
    let c5 = build("C5");
    let ev = c5.epsilon_view().unwrap();
    assert_eq!(c5.height(&ev.coeffs_of(&[(3, 2)]).unwrap()).unwrap(), 5);
    for i in 1..=5 {
        for j in i..=5 {
            let beta = if i == j {
                ev.coeffs_of(&[(i, 2)]).unwrap()
            } else {
                ev.coeffs_of(&[(i, 1), (j, 1)]).unwrap()
            };
            assert_eq!(c5.height(&beta).unwrap(), (i + j - 1) as i64);
        }
    }
    for n in 3..=8 {
        let d = RootSystem::build(SystemLabel::d(n).unwrap()).unwrap();
        let b = RootSystem::build(SystemLabel::b(n).unwrap()).unwrap();
        for (rs, lo) in [(&d, 0), (&b, 1)] {
            let ev = rs.epsilon_view().unwrap();
            for i in lo..=n {
                for j in i + 1..=n {
                    let beta = ev.coeffs_of(&[(i, 1), (j, 1)]).unwrap();
                    assert_eq!(rs.height(&beta).unwrap(), (i + j) as i64, "{} e{i}+e{j}", rs.label());
                }
            }
        }
    }
    for rs in systems_up_to(8) {
        for s in rs.simple_roots() {
            assert_eq!(rs.height(s.coeffs()).unwrap(), 1);
        }
    }
}

#[test]
fn weyl_group_orders() {
    let cases = [("A4", 120u64), ("B4", 384), ("C5", 3840), ("D6", 23040), ("E6", 51840), ("E7", 2903040), ("E8", 696729600), ("F4", 1152), ("G2", 12)];
    for (s, order) in cases {
        assert_eq!(build(s).weyl_group_order(), order, "{s}");
    }
}

#[test]
fn canonical_json_is_stable() {
    let g2 = build("G2");
    assert_eq!(g2.to_json(), build("G2").to_json());
    let v: serde_json::Value = serde_json::from_str(&g2.to_json()).unwrap();
    assert_eq!(v["coxeter_number"], 6);
    assert_eq!(v["positive_roots"].as_array().unwrap().len(), 6);
}

//! Published tables for n = 3 and the worked examples.

use steinberg_core::insertion::rs_pair;
use steinberg_core::maps::{phi, triangle, triple, triple_inverse, xi_s_generic};
use steinberg_core::oracle::signed_type;
use steinberg_core::orbit::{component_diagrams, orbit_dimension};
use steinberg_core::perm::{decompose, enumerate_partial_permutations};
use steinberg_core::signed::SignedYoungDiagram;
use steinberg_core::tableau::SkewTableau;
use steinberg_core::{OracleConfig, PartialPermutation, Partition, PrimeFieldMatrix, Tableau, DEFAULT_PRIME};

const TABLE_N3: &str = include_str!("data/table_n3.txt");

struct Row {
    word: Vec<usize>,
    sigma: Vec<(i64, i64)>,
    rs: (Tableau, Tableau),
    triple: (Tableau, Tableau, Partition),
    phi: (Partition, Partition),
    xi_s: SignedYoungDiagram,
}

fn tableau(s: &str) -> Tableau {
    if s == "." {
        return Tableau::empty();
    }
    let rows = s.split('/').map(|r| r.chars().map(|c| i64::from(c.to_digit(10).unwrap())).collect()).collect();
    Tableau::new(rows).unwrap()
}

fn partition(s: &str) -> Partition {
    if s == "." {
        return Partition::empty();
    }
    Partition::new(s.split(',').map(|x| x.parse().unwrap()).collect()).unwrap()
}

fn ints(s: &str) -> Vec<i64> {
    s.split(',').map(|x| x.parse().unwrap()).collect()
}

fn rows() -> Vec<Row> {
    TABLE_N3
        .lines()
        .filter(|l| !l.starts_with('#') && !l.trim().is_empty())
        .map(|l| {
            let f: Vec<&str> = l.split('|').map(str::trim).collect();
            let sigma = match f[1] {
                "." => Vec::new(),
                s => {
                    let (j, i) = s.split_once("->").unwrap();
                    ints(j).into_iter().zip(ints(i)).collect()
                }
            };
            Row {
                word: f[0].split(',').map(|x| x.parse().unwrap()).collect(),
                sigma,
                rs: (tableau(f[2]), tableau(f[3])),
                triple: (tableau(f[4]), tableau(f[5]), partition(f[6])),
                phi: (partition(f[7]), partition(f[8])),
                xi_s: SignedYoungDiagram::parse(&f[9].split_whitespace().collect::<Vec<_>>()).unwrap(),
            }
        })
        .collect()
}

#[test]
fn fixture_covers_all_of_t3() {
    let mut words: Vec<Vec<usize>> = rows().into_iter().map(|r| r.word).collect();
    words.sort();
    let mut all: Vec<Vec<usize>> = enumerate_partial_permutations(3).unwrap().into_iter().map(|t| t.word().to_vec()).collect();
    all.sort();
    assert_eq!(words, all);
}

#[test]
fn fixture_cell_for_cell() {
    for row in rows() {
        let tau = PartialPermutation::new(row.word.clone()).unwrap();
        let d = decompose(&tau);
        assert_eq!(d.sigma.pairs(), &row.sigma[..], "sigma of {tau}");
        assert_eq!(rs_pair(&d.sigma), row.rs, "RS pair of {tau}");
        let t = triple(&tau);
        assert_eq!((t.t1.clone(), t.t2.clone(), t.nu.clone()), row.triple, "triple of {tau}");
        assert_eq!(triple_inverse(&t).unwrap(), tau);
        assert_eq!(phi(&tau), row.phi, "phi of {tau}");
        assert_eq!(xi_s_generic(&tau).unwrap(), row.xi_s, "xi_s of {tau}");
    }
}

#[test]
fn triangle_worked_example() {
    let t1 = Tableau::new(vec![vec![1, 3], vec![4, 6], vec![5]]).unwrap();
    let t2 = Tableau::new(vec![vec![2, 4], vec![3, 6], vec![7]]).unwrap();
    let s = triangle(&t1, &t2, &[2, 7], &[1, 5], 7).unwrap();
    let outer = Partition::new(vec![4, 2, 2, 1]).unwrap();
    let inner = Partition::new(vec![1, 1]).unwrap();
    let expected = SkewTableau::new(outer, inner, vec![vec![1, 2, 7], vec![3], vec![4, 6], vec![5]]).unwrap();
    assert_eq!(s, expected);
}

#[test]
fn orbit_representative_matrix() {
    let x2 = PrimeFieldMatrix::from_rows(DEFAULT_PRIME, &[vec![0, 1, 0], vec![0, 0, 1], vec![0, 0, 0]]).unwrap();
    let x3 = PrimeFieldMatrix::from_rows(DEFAULT_PRIME, &[vec![1, 0, 0], vec![0, 0, 0], vec![0, 0, 0]]).unwrap();
    assert_eq!(signed_type(&x2, &x3).unwrap(), SignedYoungDiagram::parse(&["-+-", "+-", "+"]).unwrap());
}

#[test]
fn component_diagrams_match_expected() {
    let d = |rows: &[&str]| SignedYoungDiagram::parse(rows).unwrap();
    let mut two = vec![d(&["+-", "+-"]), d(&["+-", "-+"]), d(&["-+", "-+"])];
    two.sort();
    assert_eq!(component_diagrams(2), two);
    let mut three = vec![d(&["+-+-", "+-"]), d(&["+-+", "-+-"]), d(&["-+-+", "-+"])];
    three.sort();
    assert_eq!(component_diagrams(3), three);
    assert_eq!(component_diagrams(1), vec![d(&["+-"]), d(&["-+"])]);
}

#[test]
fn component_dimensions() {
    let cfg = OracleConfig::default();
    for lam in component_diagrams(2) {
        assert_eq!(orbit_dimension(&lam, &cfg).unwrap(), 4);
    }
    let d = |rows: &[&str]| SignedYoungDiagram::parse(rows).unwrap();
    assert_eq!(orbit_dimension(&d(&["+-+-", "+-"]), &cfg).unwrap(), 13);
    assert_eq!(orbit_dimension(&d(&["+-+", "-+-"]), &cfg).unwrap(), 12);
    assert_eq!(orbit_dimension(&d(&["-+-+", "-+"]), &cfg).unwrap(), 13);
}

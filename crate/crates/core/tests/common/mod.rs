#![allow(dead_code)]

use algebroid::constructions::{
    cyclic_group_table, group_algebra, heisenberg_datum, hopf_algebra_as_algebroid, scalar_extension_unchecked,
    sweedler_h4, symmetric_group_s3_table, HopfAlgebraData, Orientation,
};
use algebroid::format::{decode, encode, Structure, StructureFile};
use algebroid::hopf_algebroid::HopfAlgebroidData;
use algebroid::{Field, Matrix, Rational};
use rand::Rng;

pub type Q = Rational;

pub fn q(n: i64) -> Q {
    Q::from_i64(n)
}

pub fn cyclic(n: usize) -> HopfAlgebraData<Q> {
    group_algebra(&cyclic_group_table(n)).unwrap()
}

pub fn s3() -> HopfAlgebraData<Q> {
    group_algebra(&symmetric_group_s3_table()).unwrap()
}

pub fn h4() -> HopfAlgebraData<Q> {
    sweedler_h4().unwrap()
}

pub fn over_ground(a: &HopfAlgebraData<Q>) -> HopfAlgebroidData<Q> {
    hopf_algebra_as_algebroid(a).unwrap()
}

pub fn double(a: &HopfAlgebraData<Q>, o: Orientation) -> HopfAlgebroidData<Q> {
    scalar_extension_unchecked(&heisenberg_datum(a, o)).unwrap()
}

/// Hopf algebras over `k` viewed as Hopf algebroids.
pub fn degenerate_corpus() -> Vec<(String, HopfAlgebroidData<Q>)> {
    let mut out: Vec<(String, HopfAlgebroidData<Q>)> =
        (1..=4).map(|n| (format!("k[Z{n}]"), over_ground(&cyclic(n)))).collect();
    out.push(("k[S3]".into(), over_ground(&s3())));
    out.push(("H4".into(), over_ground(&h4())));
    out
}

/// Small Heisenberg doubles in both orientations.
pub fn small_doubles() -> Vec<(String, HopfAlgebroidData<Q>)> {
    let mut out = Vec::new();
    for n in [1, 2, 3] {
        for o in [Orientation::BaseIsInput, Orientation::BaseIsDual] {
            out.push((format!("double of k[Z{n}] {o:?}"), double(&cyclic(n), o)));
        }
    }
    out
}

pub fn z2_double_file() -> StructureFile {
    encode(&Structure::HopfAlgebroid(double(&cyclic(2), Orientation::BaseIsInput)))
}

/// Replaces entry `(i, j)` of a named map by `value`.
pub fn mutate(file: &StructureFile, map: &str, i: usize, j: usize, value: &str) -> StructureFile {
    let mut f = file.clone();
    let m = f.maps.get_mut(map).expect("map exists");
    m.entries.retain(|e| (e.0, e.1) != (i, j));
    if value != "0" {
        m.entries.push((i, j, value.to_string()));
        m.entries.sort_by_key(|e| (e.0, e.1));
    }
    f
}

pub fn decode_hopf(file: &StructureFile) -> HopfAlgebroidData<Q> {
    match decode::<Q>(file).unwrap() {
        Structure::HopfAlgebroid(h) => h,
        s => panic!("unexpected kind {:?}", s.kind()),
    }
}

/// The fixed mutation catalog on the k[Z2] Heisenberg double:
/// `(map, row, col, new value)`.
pub const MUTATIONS: &[(&str, usize, usize, &str)] = &[
    ("alpha_L", 0, 0, "0"),
    ("alpha_L", 2, 0, "1"),
    ("beta_L", 3, 1, "2"),
    ("alpha_R", 1, 0, "0"),
    ("beta_R", 0, 1, "1"),
    ("delta_L", 0, 0, "1"),
    ("delta_L", 15, 0, "-1"),
    ("delta_R", 8, 2, "0"),
    ("delta_R", 3, 1, "1"),
    ("eps_L", 0, 1, "1"),
    ("eps_L", 1, 2, "2"),
    ("eps_R", 0, 0, "0"),
    ("eps_R", 1, 1, "1"),
    ("antipode", 0, 0, "2"),
    ("antipode", 2, 3, "0"),
    ("antipode", 1, 2, "1"),
];

pub fn random_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize) -> Matrix<Q> {
    let density = rng.gen_range(0.2..0.9);
    let entries: Vec<Vec<Q>> = (0..rows)
        .map(|_| (0..cols).map(|_| if rng.gen_bool(density) { q(rng.gen_range(-3i64..=3)) } else { q(0) }).collect())
        .collect();
    Matrix::from_fn(rows, cols, |i, j| entries[i][j].clone())
}

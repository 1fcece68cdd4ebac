//! JSON structure files. Scalars are strings (`"-3/7"`, residues for prime
//! fields), matrices are sparse `[row, col, value]` triples, and all keys
//! serialize in sorted order so that output is canonical.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::bialgebroid::{LeftBialgebroidData, RightBialgebroidData};
use crate::constructions::{HopfAlgebraData, YDModuleAlgebra};
use crate::error::{Error, Result};
use crate::exactlin::{Field, Matrix, SparseVec};
use crate::fvect::{tensor_obj, LinMap, Obj};
use crate::hopf_algebroid::HopfAlgebroidData;
use crate::monoid_alg::MonoidData;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Monoid,
    HopfAlgebra,
    LeftBialgebroid,
    RightBialgebroid,
    HopfAlgebroid,
    YdDatum,
}

impl Kind {
    /// Required monoid names and map names.
    fn layout(self) -> (&'static [&'static str], &'static [&'static str]) {
        match self {
            Kind::Monoid => (&["A"], &[]),
            Kind::HopfAlgebra => (&["A"], &["antipode", "delta", "eps"]),
            Kind::LeftBialgebroid => (&["H", "L"], &["alpha", "beta", "delta", "eps"]),
            Kind::RightBialgebroid => (&["H", "R"], &["alpha", "beta", "delta", "eps"]),
            Kind::HopfAlgebroid => (
                &["H", "L", "R"],
                &["alpha_L", "alpha_R", "antipode", "beta_L", "beta_R", "delta_L", "delta_R", "eps_L", "eps_R"],
            ),
            Kind::YdDatum => (&["A", "H"], &["action", "antipode", "coaction", "delta", "eps"]),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub cols: usize,
    /// `[row, col, value]`, nonzero entries only in canonical output
    pub entries: Vec<(usize, usize, String)>,
    pub rows: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MonoidFile {
    pub dim: usize,
    pub eta: MatrixFile,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub mu: MatrixFile,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    pub field: String,
    pub kind: Kind,
    #[serde(default)]
    pub maps: BTreeMap<String, MatrixFile>,
    pub monoids: BTreeMap<String, MonoidFile>,
}

/// A decoded structure over a concrete field.
#[derive(Clone, Debug)]
pub enum Structure<F> {
    Monoid(MonoidData<F>),
    HopfAlgebra(HopfAlgebraData<F>),
    LeftBialgebroid(LeftBialgebroidData<F>),
    RightBialgebroid(RightBialgebroidData<F>),
    HopfAlgebroid(HopfAlgebroidData<F>),
    YdDatum(YDModuleAlgebra<F>),
}

impl<F> Structure<F> {
    pub fn kind(&self) -> Kind {
        match self {
            Structure::Monoid(_) => Kind::Monoid,
            Structure::HopfAlgebra(_) => Kind::HopfAlgebra,
            Structure::LeftBialgebroid(_) => Kind::LeftBialgebroid,
            Structure::RightBialgebroid(_) => Kind::RightBialgebroid,
            Structure::HopfAlgebroid(_) => Kind::HopfAlgebroid,
            Structure::YdDatum(_) => Kind::YdDatum,
        }
    }
}

pub fn parse_file(text: &str) -> Result<StructureFile> {
    serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))
}

pub fn to_canonical_json(file: &StructureFile) -> String {
    let mut s = serde_json::to_string_pretty(file).expect("structure files always serialize");
    s.push('\n');
    s
}

fn encode_matrix<F: Field>(m: &Matrix<F>) -> MatrixFile {
    let mut entries = Vec::with_capacity(m.nnz());
    for (j, c) in m.columns().iter().enumerate() {
        for (i, x) in c.iter() {
            entries.push((i, j, x.to_string()));
        }
    }
    entries.sort_by_key(|e| (e.0, e.1));
    MatrixFile { cols: m.cols(), entries, rows: m.rows() }
}

fn decode_matrix<F: Field>(name: &str, m: &MatrixFile) -> Result<Matrix<F>> {
    let mut cols: Vec<Vec<(usize, F)>> = vec![Vec::new(); m.cols];
    for (i, j, s) in &m.entries {
        if *i >= m.rows || *j >= m.cols {
            return Err(Error::Parse(format!("{name}: entry ({i}, {j}) outside a {}x{} matrix", m.rows, m.cols)));
        }
        let x = F::parse_scalar(s).map_err(|e| Error::Parse(format!("{name}: {e}")))?;
        cols[*j].push((*i, x));
    }
    let cols = cols
        .into_iter()
        .enumerate()
        .map(|(j, mut c)| {
            c.sort_by_key(|e| e.0);
            if c.windows(2).any(|w| w[0].0 == w[1].0) {
                return Err(Error::Parse(format!("{name}: duplicate entry in column {j}")));
            }
            Ok(SparseVec::from_pairs(c))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_columns(m.rows, cols))
}

fn encode_monoid<F: Field>(m: &MonoidData<F>) -> MonoidFile {
    MonoidFile { dim: m.dim(), eta: encode_matrix(&m.eta.mat), label: m.carrier.label.clone(), mu: encode_matrix(&m.mu.mat) }
}

fn decode_monoid<F: Field>(name: &str, m: &MonoidFile) -> Result<MonoidData<F>> {
    let carrier = Obj { dim: m.dim, label: m.label.clone() };
    let mu = decode_matrix(&format!("{name}.mu"), &m.mu)?;
    let eta = decode_matrix(&format!("{name}.eta"), &m.eta)?;
    MonoidData::new(carrier, mu, eta).map_err(|e| Error::Parse(format!("monoid {name}: {e}")))
}

fn check_layout(file: &StructureFile) -> Result<()> {
    let (monoids, maps) = file.kind.layout();
    let have: Vec<&str> = file.monoids.keys().map(String::as_str).collect();
    if have != monoids {
        return Err(Error::Parse(format!("{:?} needs monoids {monoids:?}, found {have:?}", file.kind)));
    }
    let have: Vec<&str> = file.maps.keys().map(String::as_str).collect();
    if have != maps {
        return Err(Error::Parse(format!("{:?} needs maps {maps:?}, found {have:?}", file.kind)));
    }
    Ok(())
}

fn hopf_from_parts<F: Field>(file: &StructureFile, a: MonoidData<F>) -> Result<HopfAlgebraData<F>> {
    let m = |n: &str| decode_matrix::<F>(n, &file.maps[n]);
    HopfAlgebraData::new(a, m("delta")?, m("eps")?, m("antipode")?).map_err(shape)
}

fn shape(e: Error) -> Error {
    match e {
        Error::DimensionMismatch(s) => Error::Parse(s),
        e => e,
    }
}

/// Decodes a parsed file over `F`. The caller picks `F` from `file.field`.
pub fn decode<F: Field>(file: &StructureFile) -> Result<Structure<F>> {
    if file.field != F::field_name() {
        return Err(Error::Parse(format!("file is over {:?}, decoder over {:?}", file.field, F::field_name())));
    }
    check_layout(file)?;
    let mon = |n: &str| decode_monoid::<F>(n, &file.monoids[n]);
    let m = |n: &str| decode_matrix::<F>(n, &file.maps[n]);
    Ok(match file.kind {
        Kind::Monoid => Structure::Monoid(mon("A")?),
        Kind::HopfAlgebra => Structure::HopfAlgebra(hopf_from_parts(file, mon("A")?)?),
        Kind::LeftBialgebroid => Structure::LeftBialgebroid(
            LeftBialgebroidData::new(mon("L")?, mon("H")?, m("alpha")?, m("beta")?, m("delta")?, m("eps")?).map_err(shape)?,
        ),
        Kind::RightBialgebroid => Structure::RightBialgebroid(
            RightBialgebroidData::new(mon("R")?, mon("H")?, m("alpha")?, m("beta")?, m("delta")?, m("eps")?).map_err(shape)?,
        ),
        Kind::HopfAlgebroid => {
            let h = mon("H")?;
            let left = LeftBialgebroidData::new(mon("L")?, h.clone(), m("alpha_L")?, m("beta_L")?, m("delta_L")?, m("eps_L")?)
                .map_err(shape)?;
            let right =
                RightBialgebroidData::new(mon("R")?, h.clone(), m("alpha_R")?, m("beta_R")?, m("delta_R")?, m("eps_R")?)
                    .map_err(shape)?;
            let antipode = LinMap::new(h.carrier.clone(), h.carrier.clone(), m("antipode")?).map_err(shape)?;
            Structure::HopfAlgebroid(HopfAlgebroidData { left, right, antipode })
        }
        Kind::YdDatum => {
            let hopf = hopf_from_parts(file, mon("H")?)?;
            let algebra = mon("A")?;
            let ha = tensor_obj(hopf.carrier(), &algebra.carrier);
            let action = LinMap::new(ha.clone(), algebra.carrier.clone(), m("action")?).map_err(shape)?;
            let coaction = LinMap::new(algebra.carrier.clone(), ha, m("coaction")?).map_err(shape)?;
            Structure::YdDatum(YDModuleAlgebra { hopf, algebra, action, coaction })
        }
    })
}

pub fn encode<F: Field>(s: &Structure<F>) -> StructureFile {
    let mut monoids = BTreeMap::new();
    let mut maps = BTreeMap::new();
    let mut put = |n: &str, m: &Matrix<F>| {
        maps.insert(n.to_string(), encode_matrix(m));
    };
    match s {
        Structure::Monoid(a) => {
            monoids.insert("A".into(), encode_monoid(a));
        }
        Structure::HopfAlgebra(a) => {
            monoids.insert("A".into(), encode_monoid(&a.monoid));
            put("delta", &a.delta.mat);
            put("eps", &a.eps.mat);
            put("antipode", &a.antipode.mat);
        }
        Structure::LeftBialgebroid(d) => {
            monoids.insert("L".into(), encode_monoid(&d.base));
            monoids.insert("H".into(), encode_monoid(&d.total));
            put("alpha", &d.alpha.map.mat);
            put("beta", &d.beta.map.mat);
            put("delta", &d.delta_lift().mat);
            put("eps", &d.eps.mat);
        }
        Structure::RightBialgebroid(d) => {
            monoids.insert("R".into(), encode_monoid(&d.base));
            monoids.insert("H".into(), encode_monoid(&d.total));
            put("alpha", &d.alpha.map.mat);
            put("beta", &d.beta.map.mat);
            put("delta", &d.delta_lift().mat);
            put("eps", &d.eps.mat);
        }
        Structure::HopfAlgebroid(h) => {
            monoids.insert("L".into(), encode_monoid(&h.left.base));
            monoids.insert("R".into(), encode_monoid(&h.right.base));
            monoids.insert("H".into(), encode_monoid(&h.left.total));
            put("alpha_L", &h.left.alpha.map.mat);
            put("beta_L", &h.left.beta.map.mat);
            put("delta_L", &h.left.delta_lift().mat);
            put("eps_L", &h.left.eps.mat);
            put("alpha_R", &h.right.alpha.map.mat);
            put("beta_R", &h.right.beta.map.mat);
            put("delta_R", &h.right.delta_lift().mat);
            put("eps_R", &h.right.eps.mat);
            put("antipode", &h.antipode.mat);
        }
        Structure::YdDatum(y) => {
            monoids.insert("H".into(), encode_monoid(&y.hopf.monoid));
            monoids.insert("A".into(), encode_monoid(&y.algebra));
            put("delta", &y.hopf.delta.mat);
            put("eps", &y.hopf.eps.mat);
            put("antipode", &y.hopf.antipode.mat);
            put("action", &y.action.mat);
            put("coaction", &y.coaction.mat);
        }
    }
    StructureFile { field: F::field_name(), kind: s.kind(), maps, monoids }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::sweedler_h4;
    use crate::exactlin::{Fp, Rational};

    #[test]
    fn round_trip_is_canonical() {
        let h = Structure::HopfAlgebra(sweedler_h4::<Rational>().unwrap());
        let text = to_canonical_json(&encode(&h));
        let back: Structure<Rational> = decode(&parse_file(&text).unwrap()).unwrap();
        assert_eq!(to_canonical_json(&encode(&back)), text);
    }

    #[test]
    fn rejects_bad_input() {
        let h = encode(&Structure::HopfAlgebra(sweedler_h4::<Rational>().unwrap()));
        let text = to_canonical_json(&h);
        assert!(matches!(decode::<Fp<5>>(&h), Err(Error::Parse(_))));
        let extra = text.replacen("\"field\"", "\"colour\": 1, \"field\"", 1);
        assert!(parse_file(&extra).is_err());
        let mut missing = h.clone();
        missing.maps.remove("eps");
        assert!(matches!(decode::<Rational>(&missing), Err(Error::Parse(_))));
        let mut bad = h.clone();
        bad.maps.get_mut("eps").unwrap().entries.push((0, 9, "1".into()));
        assert!(matches!(decode::<Rational>(&bad), Err(Error::Parse(_))));
        let mut bad = h;
        bad.maps.get_mut("eps").unwrap().entries[0].2 = "1/0".into();
        assert!(matches!(decode::<Rational>(&bad), Err(Error::Parse(_))));
    }
}

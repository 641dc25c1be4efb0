use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{Field, OrthRep};
use crate::error::{Error, Result};

/// A real scalar is a JSON number, a complex one a `[re, im]` pair.
#[derive(Serialize, Deserialize, Clone, Copy)]
#[serde(untagged)]
enum ScalarDoc {
    Real(f64),
    Complex([f64; 2]),
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RepDoc {
    field: Field,
    dim: usize,
    handle: Vec<ScalarDoc>,
    vectors: Vec<Vec<ScalarDoc>>,
}

fn decode(field: Field, xs: &[ScalarDoc], dim: usize, at: &str) -> Result<Vec<Complex64>> {
    if xs.len() != dim {
        return Err(Error::parse(
            at,
            format!("expected {dim} entries, got {}", xs.len()),
        ));
    }
    xs.iter()
        .enumerate()
        .map(|(k, s)| match (field, s) {
            (_, ScalarDoc::Real(x)) => Ok(Complex64::new(*x, 0.0)),
            (Field::Complex, ScalarDoc::Complex([re, im])) => Ok(Complex64::new(*re, *im)),
            (Field::Real, ScalarDoc::Complex(_)) => Err(Error::parse(
                format!("{at}[{k}]"),
                "complex entry in a real representation",
            )),
        })
        .collect()
}

pub fn parse_rep(text: &str) -> Result<OrthRep> {
    let doc: RepDoc = serde_json::from_str(text)
        .map_err(|e| Error::parse("representation document", e.to_string()))?;
    if doc.dim == 0 {
        return Err(Error::parse("dim", "dimension must be at least 1"));
    }
    let handle = decode(doc.field, &doc.handle, doc.dim, "handle")?;
    let vectors = doc
        .vectors
        .iter()
        .enumerate()
        .map(|(i, v)| decode(doc.field, v, doc.dim, &format!("vectors[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    let rep =
        OrthRep::complex(handle, vectors).map_err(|e| Error::parse("vectors", e.to_string()))?;
    match doc.field {
        Field::Real => rep.into_real(),
        Field::Complex => Ok(rep),
    }
}

pub fn serialize_rep(rep: &OrthRep) -> String {
    let enc = |v: &[Complex64]| -> Vec<ScalarDoc> {
        v.iter()
            .map(|z| match rep.field() {
                Field::Real => ScalarDoc::Real(z.re),
                Field::Complex => ScalarDoc::Complex([z.re, z.im]),
            })
            .collect()
    };
    let doc = RepDoc {
        field: rep.field(),
        dim: rep.dim(),
        handle: enc(rep.handle()),
        vectors: rep.vectors().iter().map(|v| enc(v)).collect(),
    };
    serde_json::to_string(&doc).expect("representation document serializes")
}

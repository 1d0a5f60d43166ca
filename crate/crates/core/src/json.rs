//! JSON forms of the exact types.
//!
//! - `QPoly`: ascending coefficients as `"num/den"` strings.
//! - `QRat`: `{"num": QPoly, "den": QPoly}`.
//! - `SymFun`: `{"degree", "basis", "coeffs": [{"partition", "num", "den"}]}`.
//! - `PathCombination`: `{"n", "terms": [{"paths", "coeff": QRat}]}`.
//! - `PFilling`: rows as ragged arrays; skew fillings add `"inner"`.

use num_rational::BigRational;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::combinat::Partition;
use crate::modlaw::PathCombination;
use crate::ptab::PFilling;
use crate::qalg::{parse_rational, QPoly, QRat};
use crate::symfun::{Basis, SymFun};

fn ratio_to_string(c: &BigRational) -> String {
    format!("{}/{}", c.numer(), c.denom())
}

impl Serialize for QPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let v: Vec<String> = self.coeffs().iter().map(ratio_to_string).collect();
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Vec::<String>::deserialize(d)?;
        let coeffs = v.iter().map(|s| parse_rational(s)).collect::<Result<Vec<_>, _>>().map_err(D::Error::custom)?;
        Ok(QPoly::new(coeffs))
    }
}

#[derive(Serialize, Deserialize)]
struct RatRepr {
    num: QPoly,
    den: QPoly,
}

impl Serialize for QRat {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        RatRepr { num: self.num().clone(), den: self.den().clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for QRat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = RatRepr::deserialize(d)?;
        QRat::new(r.num, r.den).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    partition: Partition,
    num: QPoly,
    den: QPoly,
}

#[derive(Serialize, Deserialize)]
struct SymFunRepr {
    degree: usize,
    basis: String,
    coeffs: Vec<TermRepr>,
}

impl Serialize for SymFun {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let coeffs = self
            .terms()
            .rev()
            .map(|(p, c)| TermRepr { partition: p.clone(), num: c.num().clone(), den: c.den().clone() })
            .collect();
        SymFunRepr { degree: self.degree(), basis: self.basis().letter().to_string(), coeffs }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for SymFun {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = SymFunRepr::deserialize(d)?;
        let basis = Basis::from_letter(&r.basis).map_err(D::Error::custom)?;
        let terms = r
            .coeffs
            .into_iter()
            .map(|t| QRat::new(t.num, t.den).map(|c| (t.partition, c)))
            .collect::<crate::Result<Vec<_>>>()
            .map_err(D::Error::custom)?;
        SymFun::from_terms(r.degree, basis, terms).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
struct PathTermRepr {
    paths: Vec<usize>,
    coeff: QRat,
}

#[derive(Serialize, Deserialize)]
struct CertificateRepr {
    n: usize,
    terms: Vec<PathTermRepr>,
}

impl Serialize for PathCombination {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let terms = self
            .terms()
            .iter()
            .map(|(p, c)| PathTermRepr { paths: p.clone(), coeff: c.clone() })
            .collect();
        CertificateRepr { n: self.n(), terms }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for PathCombination {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let r = CertificateRepr::deserialize(d)?;
        PathCombination::from_terms(r.n, r.terms.into_iter().map(|t| (t.paths, t.coeff))).map_err(D::Error::custom)
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum FillingRepr {
    Straight(Vec<Vec<usize>>),
    Skew { inner: Vec<usize>, rows: Vec<Vec<usize>> },
}

impl Serialize for PFilling {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        if self.inner().iter().all(|&a| a == 0) {
            FillingRepr::Straight(self.rows().to_vec()).serialize(s)
        } else {
            FillingRepr::Skew { inner: self.inner().to_vec(), rows: self.rows().to_vec() }.serialize(s)
        }
    }
}

impl<'de> Deserialize<'de> for PFilling {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        match FillingRepr::deserialize(d)? {
            FillingRepr::Straight(rows) => Ok(PFilling::from_rows(rows)),
            FillingRepr::Skew { inner, rows } => {
                if inner.len() != rows.len() {
                    return Err(D::Error::custom("inner and rows differ in length"));
                }
                let mu = Partition::from_multiset(inner.clone());
                if mu.parts() != inner.iter().copied().filter(|&a| a > 0).collect::<Vec<_>>() {
                    return Err(D::Error::custom("inner offsets are not weakly decreasing"));
                }
                Ok(PFilling::skew(&mu, rows))
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hessenberg::HessFn;
    use crate::modlaw::reduce;
    use crate::qalg::q_int;
    use serde_json::json;

    #[test]
    fn poly_and_rat() {
        let p = QPoly::from_ints(&[1, 0, -2]);
        assert_eq!(serde_json::to_value(&p).unwrap(), json!(["1/1", "0/1", "-2/1"]));
        let r = QRat::new(QPoly::q_pow(1), q_int(3)).unwrap();
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v, json!({"num": ["0/1", "1/1"], "den": ["1/1", "1/1", "1/1"]}));
        assert_eq!(serde_json::from_value::<QRat>(v).unwrap(), r);
        assert!(serde_json::from_value::<QRat>(json!({"num": ["1"], "den": []})).is_err());
    }

    #[test]
    fn symfun_round_trip() {
        let f = SymFun::e(Partition::new(vec![2, 1]).unwrap()).scale(&QRat::from_poly(q_int(2)));
        let v = serde_json::to_value(&f).unwrap();
        assert_eq!(
            v,
            json!({"degree": 3, "basis": "e", "coeffs": [{"partition": [2, 1], "num": ["1/1", "1/1"], "den": ["1/1"]}]})
        );
        assert_eq!(serde_json::from_value::<SymFun>(v).unwrap(), f);
    }

    #[test]
    fn certificate_round_trip() {
        let c = reduce(&HessFn::new(vec![3, 4, 4, 5, 5]).unwrap()).unwrap();
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(serde_json::from_str::<PathCombination>(&s).unwrap(), c);
        let single = serde_json::to_value(reduce(&HessFn::path(2)).unwrap()).unwrap();
        assert_eq!(single, json!({"n": 2, "terms": [{"paths": [2], "coeff": {"num": ["1/1"], "den": ["1/1"]}}]}));
    }

    #[test]
    fn filling_forms() {
        let t = PFilling::from_rows(vec![vec![1, 5], vec![3]]);
        assert_eq!(serde_json::to_value(&t).unwrap(), json!([[1, 5], [3]]));
        let skew = PFilling::skew(&Partition::new(vec![1]).unwrap(), vec![vec![2], vec![1]]);
        let v = serde_json::to_value(&skew).unwrap();
        assert_eq!(v, json!({"inner": [1, 0], "rows": [[2], [1]]}));
        assert_eq!(serde_json::from_value::<PFilling>(v).unwrap(), skew);
    }
}

//! Constructive achievement: coefficient vectors whose determinant is a given
//! member of `S(G)`, built from parameterized identities and composed by the
//! group-ring product.

mod achieve;
mod classical;
mod identities;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::group::{build_group, GroupSpec, GroupTable};
use crate::measure::{convolve, group_determinant, CoeffVector};

pub use achieve::achieve;

type Template = Arc<dyn Fn(&[BigInt]) -> Vec<BigInt> + Send + Sync>;
type Claimed = Arc<dyn Fn(&[BigInt]) -> BigInt + Send + Sync>;

/// A coefficient template together with the determinant it is claimed to
/// have, for every integer parameter tuple.
#[derive(Clone)]
pub struct ConstructionIdentity {
    pub id: String,
    pub groups: Vec<GroupSpec>,
    /// Parameter names, in order.
    pub params: Vec<&'static str>,
    template: Template,
    claimed: Claimed,
}

impl ConstructionIdentity {
    pub(crate) fn new(
        id: &str,
        groups: &[&str],
        params: &[&'static str],
        template: impl Fn(&[BigInt]) -> Vec<BigInt> + Send + Sync + 'static,
        claimed: impl Fn(&[BigInt]) -> BigInt + Send + Sync + 'static,
    ) -> Self {
        ConstructionIdentity {
            id: id.to_string(),
            groups: groups
                .iter()
                .map(|g| g.parse().expect("identity group names parse"))
                .collect(),
            params: params.to_vec(),
            template: Arc::new(template),
            claimed: Arc::new(claimed),
        }
    }

    pub fn arity(&self) -> usize {
        self.params.len()
    }

    pub fn applies_to(&self, spec: &GroupSpec) -> bool {
        self.groups.contains(spec)
    }

    /// # Panics
    /// If `params` has the wrong length.
    pub fn template(&self, params: &[BigInt]) -> CoeffVector {
        assert_eq!(params.len(), self.arity(), "{} takes {} parameters", self.id, self.arity());
        CoeffVector::new((self.template)(params))
    }

    pub fn claimed(&self, params: &[BigInt]) -> BigInt {
        assert_eq!(params.len(), self.arity(), "{} takes {} parameters", self.id, self.arity());
        (self.claimed)(params)
    }

    /// Whether the determinant of the template over `spec` equals the claimed
    /// value at `params`.
    pub fn check(&self, table: &GroupTable, params: &[BigInt]) -> Result<bool> {
        Ok(group_determinant(table, &self.template(params))? == self.claimed(params))
    }
}

impl fmt::Debug for ConstructionIdentity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ConstructionIdentity")
            .field("id", &self.id)
            .field("groups", &self.groups.iter().map(|g| g.name()).collect::<Vec<_>>())
            .field("params", &self.params)
            .finish()
    }
}

struct Registry {
    all: Vec<ConstructionIdentity>,
    by_id: HashMap<String, usize>,
}

fn registry() -> &'static Registry {
    static REG: OnceLock<Registry> = OnceLock::new();
    REG.get_or_init(|| {
        let all = identities::all();
        let mut by_id = HashMap::new();
        for (i, ident) in all.iter().enumerate() {
            let dup = by_id.insert(ident.id.clone(), i);
            assert!(dup.is_none(), "duplicate identity id {}", ident.id);
        }
        Registry { all, by_id }
    })
}

/// Every registered identity, across all groups.
pub fn all_identities() -> &'static [ConstructionIdentity] {
    &registry().all
}

pub fn identity(id: &str) -> Option<&'static ConstructionIdentity> {
    let reg = registry();
    reg.by_id.get(id).map(|&i| &reg.all[i])
}

/// The identities applying to `spec`; empty for `Z1`, whose values are the
/// constants themselves.
pub fn catalog(spec: &GroupSpec) -> Result<Vec<ConstructionIdentity>> {
    if !spec.is_supported() {
        return Err(Error::UnsupportedGroup(spec.name()));
    }
    Ok(all_identities()
        .iter()
        .filter(|i| i.applies_to(spec))
        .cloned()
        .collect())
}

/// One factor of a composed witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProvenanceStep {
    pub id: String,
    pub params: BTreeMap<String, String>,
    /// The factor this step contributes to the witness value.
    pub value: String,
}

/// A coefficient vector with its verified determinant. The step values
/// multiply to `value`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    #[serde(rename = "group")]
    pub spec: GroupSpec,
    pub coeffs: CoeffVector,
    #[serde(serialize_with = "ser_int", deserialize_with = "de_int")]
    pub value: BigInt,
    pub provenance: Vec<ProvenanceStep>,
}

fn ser_int<S: Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

fn de_int<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<BigInt, D::Error> {
    String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
}

impl Witness {
    /// Recomputes the determinant.
    pub fn verify(&self) -> Result<bool> {
        let table = build_group(&self.spec)?;
        Ok(group_determinant(&table, &self.coeffs)? == self.value)
    }

    /// Product of the provenance step values.
    pub fn provenance_product(&self) -> Option<BigInt> {
        self.provenance
            .iter()
            .try_fold(BigInt::one(), |acc, s| s.value.parse::<BigInt>().ok().map(|v| acc * v))
    }
}

/// Witness for `-w.value`: the `f, g` swap for dicyclic groups with `n` odd,
/// global negation for groups of odd order.
pub fn negate_or_swap(spec: &GroupSpec, w: &Witness) -> Result<Witness> {
    if &w.spec != spec {
        return Err(Error::Precondition(format!(
            "witness is over {}, not {}",
            w.spec.name(),
            spec.name()
        )));
    }
    if w.value.is_zero() {
        return Ok(w.clone());
    }
    let mut b = Builder::from_witness(w)?;
    b.negate()?;
    Ok(b.finish(&-&w.value))
}

/// Accumulates a witness as a group-ring product of identity instances.
pub(crate) struct Builder {
    spec: GroupSpec,
    table: GroupTable,
    coeffs: CoeffVector,
    value: BigInt,
    steps: Vec<ProvenanceStep>,
}

impl Builder {
    pub(crate) fn new(spec: &GroupSpec) -> Result<Self> {
        let table = build_group(spec)?;
        Ok(Builder {
            spec: spec.clone(),
            coeffs: CoeffVector::identity(table.order),
            table,
            value: BigInt::one(),
            steps: Vec::new(),
        })
    }

    fn from_witness(w: &Witness) -> Result<Self> {
        let table = build_group(&w.spec)?;
        Ok(Builder {
            spec: w.spec.clone(),
            table,
            coeffs: w.coeffs.clone(),
            value: w.value.clone(),
            steps: w.provenance.clone(),
        })
    }

    pub(crate) fn value(&self) -> &BigInt {
        &self.value
    }

    fn push(&mut self, id: &str, params: BTreeMap<String, String>, factor: &BigInt, c: CoeffVector) {
        self.coeffs = convolve(&self.table, &self.coeffs, &c).expect("lengths match the group");
        self.value *= factor;
        self.steps.push(ProvenanceStep {
            id: id.to_string(),
            params,
            value: factor.to_string(),
        });
    }

    /// Multiplies in the identity `id` at `params`.
    ///
    /// # Panics
    /// If `id` is unknown or does not apply to the group.
    pub(crate) fn apply(&mut self, id: &str, params: &[BigInt]) {
        let ident = identity(id).unwrap_or_else(|| panic!("unknown identity {id}"));
        assert!(ident.applies_to(&self.spec), "{id} does not apply to {}", self.spec);
        let named = ident
            .params
            .iter()
            .zip(params)
            .map(|(n, v)| (n.to_string(), v.to_string()))
            .collect();
        let factor = ident.claimed(params);
        let c = ident.template(params);
        self.push(id, named, &factor, c);
    }

    pub(crate) fn apply_i(&mut self, id: &str, params: &[i64]) {
        let p: Vec<BigInt> = params.iter().map(|&a| BigInt::from(a)).collect();
        self.apply(id, &p);
    }

    /// The constant vector `(v, 0, ..., 0)`; only `Z1` uses it.
    pub(crate) fn constant(&mut self, v: &BigInt) {
        let mut c = CoeffVector::zeros(self.table.order).into_entries();
        c[0] = v.clone();
        let mut params = BTreeMap::new();
        params.insert("v".to_string(), v.to_string());
        self.push("constant", params, v, CoeffVector::new(c));
    }

    pub(crate) fn negate(&mut self) -> Result<()> {
        let n = self.table.order;
        let (id, coeffs) = match &self.spec {
            GroupSpec::Dicyclic(k) if k % 2 == 1 => {
                let e = self.coeffs.entries();
                let half = n / 2;
                let swapped: Vec<BigInt> = e[half..].iter().chain(&e[..half]).cloned().collect();
                ("swap-fg", CoeffVector::new(swapped))
            }
            s if s.is_abelian() && n % 2 == 1 => ("negate", -&self.coeffs),
            s => return Err(Error::UnsupportedGroup(format!("{s} has no sign mechanism"))),
        };
        self.coeffs = coeffs;
        self.value = -&self.value;
        self.steps.push(ProvenanceStep {
            id: id.to_string(),
            params: BTreeMap::new(),
            value: "-1".to_string(),
        });
        Ok(())
    }

    /// Asserts the determinant and returns the witness.
    ///
    /// # Panics
    /// If the accumulated vector does not have determinant `v`; every
    /// template is checked by the identity suite, so this is a logic error.
    pub(crate) fn finish(self, v: &BigInt) -> Witness {
        let det = group_determinant(&self.table, &self.coeffs).expect("lengths match the group");
        assert_eq!(&self.value, v, "{}: composed value differs from the target", self.spec);
        assert_eq!(&det, v, "{}: determinant differs from the composed value", self.spec);
        Witness {
            spec: self.spec,
            coeffs: self.coeffs,
            value: det,
            provenance: self.steps,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(name: &str) -> GroupSpec {
        name.parse().unwrap()
    }

    #[test]
    fn catalog_sizes() {
        assert_eq!(catalog(&g("Z3xZ3")).unwrap().len(), 3);
        assert_eq!(catalog(&g("Z2^3")).unwrap().len(), 4);
        assert!(catalog(&g("Z1")).unwrap().is_empty());
        assert!(all_identities().len() >= 40);
        assert!(matches!(catalog(&g("Z15")), Err(Error::UnsupportedGroup(_))));
    }

    #[test]
    fn every_identity_holds_on_a_small_box() {
        for ident in all_identities() {
            for spec in &ident.groups {
                let t = build_group(spec).unwrap();
                let n = ident.arity();
                for idx in 0..5usize.pow(n as u32) {
                    let params: Vec<BigInt> = (0..n)
                        .map(|j| BigInt::from((idx / 5usize.pow(j as u32) % 5) as i64 - 2))
                        .collect();
                    let c = ident.template(&params);
                    assert_eq!(
                        group_determinant(&t, &c).unwrap(),
                        ident.claimed(&params),
                        "{} over {spec} at {params:?}",
                        ident.id
                    );
                }
            }
        }
    }

    #[test]
    fn sign_mechanisms() {
        let q12 = g("Q12");
        let mut b = Builder::new(&q12).unwrap();
        b.apply_i("o12.1+12t", &[1]);
        let w = b.finish(&BigInt::from(13));
        let neg = negate_or_swap(&q12, &w).unwrap();
        assert_eq!(neg.value, BigInt::from(-13));
        assert!(neg.verify().unwrap());
        assert_eq!(neg.provenance_product(), Some(BigInt::from(-13)));

        let z33 = g("Z3xZ3");
        let mut b = Builder::new(&z33).unwrap();
        b.apply_i("Z3xZ3.9m+-1", &[1, 0]);
        let w = b.finish(&BigInt::from(10));
        assert_eq!(negate_or_swap(&z33, &w).unwrap().value, BigInt::from(-10));

        let zero = Witness {
            spec: q12.clone(),
            coeffs: CoeffVector::zeros(12),
            value: BigInt::zero(),
            provenance: vec![],
        };
        assert_eq!(negate_or_swap(&q12, &zero).unwrap(), zero);

        let q8 = g("Q8");
        let mut b = Builder::new(&q8).unwrap();
        b.apply_i("o8.8m+1", &[1]);
        let w = b.finish(&BigInt::from(9));
        assert!(matches!(negate_or_swap(&q8, &w), Err(Error::UnsupportedGroup(_))));
    }

    #[test]
    fn json_shape() {
        let spec = g("Z2^3");
        let mut b = Builder::new(&spec).unwrap();
        b.apply_i("Z2^3.8m+1", &[2]);
        let w = b.finish(&BigInt::from(17));
        let j = serde_json::to_value(&w).unwrap();
        let keys: Vec<&String> = j.as_object().unwrap().keys().collect();
        assert_eq!(keys.len(), 4);
        assert_eq!(j["group"], "Z2^3");
        assert_eq!(j["value"], "17");
        assert_eq!(j["coeffs"][0], "3");
        let back: Witness = serde_json::from_value(j).unwrap();
        assert_eq!(back, w);
    }
}

//! Structure files: one JSON object per file describing an algebra, a local
//! pair, a contact triple, a finite space, or a map between two of these.
//!
//! ```json
//! {"algebra": {"kind": "powerset", "atoms": 2}, "ideal": {"generators": [[0]]}}
//! {"algebra": {"kind": "fincofin"}, "ideal": "fin"}
//! {"algebra": {"kind": "powerset", "atoms": 3}, "bounded": "all",
//!  "contact": {"atom_relation": [[0, 1]]}}
//! {"space": {"points": 2, "opens": [[], [0], [0, 1]]}}
//! {"source": {...}, "target": {...}, "point_map": [0, 0]}
//! ```
//!
//! Algebra maps use `"table"` (the image of every element in canonical
//! order) or `"atom_map"` (for each target atom, the source atom it lies
//! under).

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::ba::{make_algebra_with_cap, Algebra, AlgebraKind, Elem, ElemSet, FcIdeal, Powerset, StructMap};
use crate::contact::{from_atom_relation, rho_s, ContactTriple, Relation};
use crate::error::{Error, Result};
use crate::lba::LocalPair;
use crate::topo::{point_list, point_set, FinSpace, SpaceMap};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum IdealSpec {
    /// `"all"` or, on FinCofin, `"fin"`.
    Named(String),
    Members { members: Vec<Elem> },
    Generators { generators: Vec<Elem> },
    Fc(FcIdeal),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ContactSpec {
    /// `"rho_s"`: overlap, `a ∧ b ≠ 0`.
    Named(String),
    AtomRelation { atom_relation: Vec<(usize, usize)> },
    Pairs { pairs: Vec<(Elem, Elem)> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SpaceSpec {
    pub points: usize,
    pub opens: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureFile {
    algebra: Option<AlgebraKind>,
    ideal: Option<IdealSpec>,
    bounded: Option<IdealSpec>,
    contact: Option<ContactSpec>,
    space: Option<SpaceSpec>,
    source: Option<Box<StructureFile>>,
    target: Option<Box<StructureFile>>,
    point_map: Option<Vec<usize>>,
    table: Option<Vec<Elem>>,
    atom_map: Option<Vec<usize>>,
}

#[derive(Clone, Debug)]
pub enum Structure {
    Algebra(Algebra),
    Pair(LocalPair),
    FcPair(FcIdeal),
    Triple(ContactTriple),
    Space(FinSpace),
    SpaceMap(SpaceMap),
    AlgebraMap {
        source: Box<Structure>,
        target: Box<Structure>,
        map: StructMap,
    },
}

impl Structure {
    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Algebra(_) => "algebra",
            Structure::Pair(_) => "local pair",
            Structure::FcPair(_) => "FinCofin pair",
            Structure::Triple(_) => "contact triple",
            Structure::Space(_) => "space",
            Structure::SpaceMap(_) => "space map",
            Structure::AlgebraMap { .. } => "algebra map",
        }
    }

    /// The underlying powerset of an algebra-side structure.
    pub fn powerset(&self) -> Option<Powerset> {
        match self {
            Structure::Algebra(Algebra::Powerset(p)) => Some(*p),
            Structure::Pair(p) => Some(p.algebra),
            Structure::Triple(t) => Some(t.algebra),
            _ => None,
        }
    }
}

pub fn parse_structure(text: &str, max_atoms: usize) -> Result<Structure> {
    let file: StructureFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    build(file, max_atoms)
}

fn ideal_of(alg: Powerset, spec: &IdealSpec) -> Result<ElemSet> {
    let s = match spec {
        IdealSpec::Named(n) if n == "all" => alg.all(),
        IdealSpec::Named(n) => return Err(Error::Parse(format!("unknown ideal name {n:?}"))),
        IdealSpec::Members { members } => {
            let s: ElemSet = members.iter().copied().collect();
            alg.check_members(&s)?;
            s
        }
        IdealSpec::Generators { generators } => {
            let s: ElemSet = generators.iter().copied().collect();
            alg.check_members(&s)?;
            alg.down(alg.join_all(s))
        }
        IdealSpec::Fc(_) => return Err(Error::Parse("FinCofin ideal on a powerset".into())),
    };
    alg.require_ideal(&s)?;
    Ok(s)
}

fn fc_ideal_of(spec: &IdealSpec) -> Result<FcIdeal> {
    match spec {
        IdealSpec::Named(n) if n == "fin" => Ok(FcIdeal::fin()),
        IdealSpec::Named(n) if n == "all" => Ok(FcIdeal::all()),
        IdealSpec::Fc(i) => Ok(i.clone()),
        other => Err(Error::Parse(format!("not a FinCofin ideal: {other:?}"))),
    }
}

fn build(f: StructureFile, max_atoms: usize) -> Result<Structure> {
    if let Some(src) = f.source {
        let tgt = f.target.ok_or_else(|| Error::Parse("map without a target".into()))?;
        let (source, target) = (build(*src, max_atoms)?, build(*tgt, max_atoms)?);
        return build_map(source, target, f.point_map, f.table, f.atom_map);
    }
    if let Some(sp) = f.space {
        let opens = sp.opens.iter().map(|o| point_set(o.iter().copied()));
        if let Some(&bad) = sp.opens.iter().flatten().find(|&&i| i >= sp.points) {
            return Err(Error::Membership(format!("point {bad} outside 0..{}", sp.points)));
        }
        return Ok(Structure::Space(FinSpace::new(sp.points, opens)?));
    }
    let kind = f.algebra.ok_or_else(|| Error::Parse("expected \"algebra\", \"space\" or \"source\"".into()))?;
    let alg = make_algebra_with_cap(kind, max_atoms)?;
    let p = match alg {
        Algebra::FinCofin => {
            if f.contact.is_some() || f.bounded.is_some() {
                return Err(Error::Unsupported("contact relations on FinCofin files".into()));
            }
            return Ok(match f.ideal {
                Some(spec) => Structure::FcPair(fc_ideal_of(&spec)?),
                None => Structure::Algebra(alg),
            });
        }
        Algebra::Powerset(p) => p,
    };
    if let Some(spec) = f.contact {
        let bounded = ideal_of(p, f.bounded.as_ref().unwrap_or(&IdealSpec::Named("all".into())))?;
        let t = match spec {
            ContactSpec::Named(n) if n == "rho_s" => rho_s(p, &bounded)?,
            ContactSpec::Named(n) => return Err(Error::Parse(format!("unknown contact {n:?}"))),
            ContactSpec::AtomRelation { atom_relation } => from_atom_relation(p, &atom_relation, bounded)?,
            ContactSpec::Pairs { pairs } => ContactTriple::new(p, Relation::from_pairs(p, pairs)?, bounded)?,
        };
        return Ok(Structure::Triple(t));
    }
    if f.bounded.is_some() {
        return Err(Error::Parse("\"bounded\" needs \"contact\"".into()));
    }
    Ok(match f.ideal {
        Some(spec) => Structure::Pair(LocalPair::new(p, ideal_of(p, &spec)?)?),
        None => Structure::Algebra(alg),
    })
}

fn build_map(
    source: Structure,
    target: Structure,
    point_map: Option<Vec<usize>>,
    table: Option<Vec<Elem>>,
    atom_map: Option<Vec<usize>>,
) -> Result<Structure> {
    if let (Structure::Space(x), Structure::Space(y)) = (&source, &target) {
        let m = point_map.ok_or_else(|| Error::Parse("space map needs \"point_map\"".into()))?;
        return Ok(Structure::SpaceMap(SpaceMap::new(x.clone(), y.clone(), m)?));
    }
    let (a, b) = match (source.powerset(), target.powerset()) {
        (Some(a), Some(b)) => (a, b),
        _ => {
            return Err(Error::Unsupported(format!(
                "maps from {} to {}",
                source.kind(),
                target.kind()
            )))
        }
    };
    let map = match (table, atom_map) {
        (Some(t), None) => StructMap::from_table(a, b, t)?,
        (None, Some(m)) => StructMap::from_atom_map(a, b, &m)?,
        _ => return Err(Error::Parse("algebra map needs exactly one of \"table\" and \"atom_map\"".into())),
    };
    Ok(Structure::AlgebraMap {
        source: Box::new(source),
        target: Box::new(target),
        map,
    })
}

pub fn powerset_json(p: Powerset) -> Value {
    json!({"kind": "powerset", "atoms": p.atom_count()})
}

pub fn space_json(x: &FinSpace) -> Value {
    let opens: Vec<Vec<usize>> = x.opens().iter().map(|&o| point_list(o)).collect();
    json!({"space": {"points": x.point_count(), "opens": opens}})
}

pub fn pair_json(p: &LocalPair) -> Value {
    json!({"algebra": powerset_json(p.algebra), "ideal": {"members": p.ideal}})
}

pub fn triple_json(t: &ContactTriple) -> Value {
    json!({
        "algebra": powerset_json(t.algebra),
        "bounded": {"members": t.bounded},
        "contact": {"pairs": t.rho},
    })
}

/// The structure in file form; parsing the result gives it back.
pub fn to_json(s: &Structure) -> Value {
    match s {
        Structure::Algebra(Algebra::Powerset(p)) => json!({"algebra": powerset_json(*p)}),
        Structure::Algebra(Algebra::FinCofin) => json!({"algebra": {"kind": "fincofin"}}),
        Structure::Pair(p) => pair_json(p),
        Structure::FcPair(i) => json!({"algebra": {"kind": "fincofin"}, "ideal": i}),
        Structure::Triple(t) => triple_json(t),
        Structure::Space(x) => space_json(x),
        Structure::SpaceMap(f) => json!({
            "source": space_json(&f.source),
            "target": space_json(&f.target),
            "point_map": f.table(),
        }),
        Structure::AlgebraMap { source, target, map } => json!({
            "source": to_json(source),
            "target": to_json(target),
            "table": map.table(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ba::MAX_ATOMS;

    fn parse(s: &str) -> Result<Structure> {
        parse_structure(s, MAX_ATOMS)
    }

    fn roundtrip(s: &str) {
        let a = parse(s).unwrap();
        let text = to_json(&a).to_string();
        let b = parse(&text).unwrap();
        assert_eq!(format!("{a:?}"), format!("{b:?}"), "{text}");
    }

    #[test]
    fn parses_each_kind() {
        let cases = [
            r#"{"algebra": {"kind": "powerset", "atoms": 2}}"#,
            r#"{"algebra": {"kind": "powerset", "atoms": 2}, "ideal": "all"}"#,
            r#"{"algebra": {"kind": "powerset", "atoms": 3}, "ideal": {"generators": [[0, 1], [2]]}}"#,
            r#"{"algebra": {"kind": "fincofin"}, "ideal": "fin"}"#,
            r#"{"algebra": {"kind": "fincofin"}}"#,
            r#"{"algebra": {"kind": "powerset", "atoms": 2}, "bounded": "all", "contact": "rho_s"}"#,
            r#"{"algebra": {"kind": "powerset", "atoms": 3}, "contact": {"atom_relation": [[0, 1]]}}"#,
            r#"{"space": {"points": 2, "opens": [[], [0], [0, 1]]}}"#,
            r#"{"source": {"space": {"points": 1, "opens": [[], [0]]}},
                "target": {"space": {"points": 2, "opens": [[], [0], [0, 1]]}}, "point_map": [1]}"#,
            r#"{"source": {"algebra": {"kind": "powerset", "atoms": 1}},
                "target": {"algebra": {"kind": "powerset", "atoms": 2}}, "atom_map": [0, 0]}"#,
        ];
        for c in cases {
            roundtrip(c);
        }
    }

    #[test]
    fn generators_give_principal_ideal() {
        match parse(r#"{"algebra": {"kind": "powerset", "atoms": 3}, "ideal": {"generators": [[0], [1]]}}"#) {
            Err(Error::Precondition(m)) => assert!(m.contains("not dense")),
            other => panic!("{other:?}"),
        }
        match parse(r#"{"algebra": {"kind": "powerset", "atoms": 2}, "ideal": {"generators": [[0], [1]]}}"#).unwrap() {
            Structure::Pair(p) => assert_eq!(p.ideal.len(), 4),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(parse("{"), Err(Error::Parse(_))));
        assert!(matches!(parse(r#"{"colour": 1}"#), Err(Error::Parse(_))));
        assert!(matches!(
            parse(r#"{"algebra": {"kind": "powerset", "atoms": 40}}"#),
            Err(Error::Size { .. })
        ));
        assert!(matches!(
            parse(r#"{"algebra": {"kind": "powerset", "atoms": 2}, "ideal": {"members": [[0], [1]]}}"#),
            Err(Error::Structure(_))
        ));
        assert!(matches!(
            parse(r#"{"space": {"points": 2, "opens": [[0]]}}"#),
            Err(Error::Structure(_))
        ));
    }

    #[test]
    fn cap_override() {
        let s = r#"{"algebra": {"kind": "powerset", "atoms": 5}}"#;
        assert!(parse_structure(s, 4).is_err());
        assert!(parse_structure(s, 5).is_ok());
    }
}

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

use super::{Arrow, FLevelComplex, FreeUComplex, Generator};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorRecord {
    pub name: String,
    pub alexander: i64,
    pub maslov: i64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArrowRecord {
    pub from: String,
    pub to: String,
    pub upower: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UmapRecord {
    pub from: String,
    pub to: String,
}

/// Shared wire format for free and reduced complexes; the last two fields
/// only appear for F₂-level complexes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexJson {
    pub generators: Vec<GeneratorRecord>,
    pub differential: Vec<ArrowRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub umap: Option<Vec<UmapRecord>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stable_window: Option<i64>,
}

/// Output order: Maslov descending, then Alexander descending, then name.
fn output_order(records: &[GeneratorRecord]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..records.len()).collect();
    order.sort_by(|&a, &b| {
        let (x, y) = (&records[a], &records[b]);
        y.maslov.cmp(&x.maslov).then(y.alexander.cmp(&x.alexander)).then(x.name.cmp(&y.name))
    });
    order
}

fn sorted_output(
    records: Vec<GeneratorRecord>,
    edges: Vec<(usize, usize, u32)>,
    umap: Option<Vec<(usize, usize)>>,
    stable_window: Option<i64>,
) -> ComplexJson {
    let order = output_order(&records);
    let mut rank = vec![0; records.len()];
    for (k, &i) in order.iter().enumerate() {
        rank[i] = k;
    }
    let name = |i: usize| records[i].name.clone();
    let mut edges = edges;
    edges.sort_by_key(|&(f, t, k)| (rank[f], rank[t], k));
    let differential =
        edges.into_iter().map(|(f, t, upower)| ArrowRecord { from: name(f), to: name(t), upower }).collect();
    let umap = umap.map(|mut u| {
        u.sort_by_key(|&(f, t)| (rank[f], rank[t]));
        u.into_iter().map(|(f, t)| UmapRecord { from: name(f), to: name(t) }).collect()
    });
    let generators = order.iter().map(|&i| records[i].clone()).collect();
    ComplexJson { generators, differential, umap, stable_window }
}

impl FreeUComplex {
    pub fn to_json(&self) -> ComplexJson {
        let records = self
            .generators()
            .iter()
            .map(|g| GeneratorRecord { name: g.name.clone(), alexander: g.alexander, maslov: g.maslov })
            .collect();
        let edges = self.arrows().into_iter().map(|a| (a.from, a.to, a.upower)).collect();
        sorted_output(records, edges, None, None)
    }

    /// Generators keep their file order.
    pub fn from_json(json: &ComplexJson) -> Result<Self> {
        if json.umap.is_some() {
            return Err(Error::Malformed("a free complex cannot carry a umap".into()));
        }
        let generators: Vec<Generator> =
            json.generators.iter().map(|g| Generator::new(g.name.clone(), g.alexander, g.maslov)).collect();
        let index: HashMap<&str, usize> =
            generators.iter().enumerate().map(|(i, g)| (g.name.as_str(), i)).collect();
        let lookup = |n: &str| {
            index.get(n).copied().ok_or_else(|| Error::Malformed(format!("unknown generator {n}")))
        };
        let arrows = json
            .differential
            .iter()
            .map(|a| Ok(Arrow { from: lookup(&a.from)?, to: lookup(&a.to)?, upower: a.upower }))
            .collect::<Result<Vec<_>>>()?;
        Self::from_arrows(generators, &arrows)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("complex JSON is serializable")
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        Self::from_json(&serde_json::from_str(text)?)
    }
}

impl FLevelComplex {
    pub fn to_json(&self) -> ComplexJson {
        let records = self
            .elements()
            .iter()
            .map(|e| GeneratorRecord { name: e.label(), alexander: e.alexander, maslov: e.maslov })
            .collect();
        let mut edges = Vec::new();
        let mut umap = Vec::new();
        for i in 0..self.len() {
            edges.extend(self.boundary_of(i).iter().map(|&t| (i, t, 0)));
            umap.extend(self.umap_of(i).iter().map(|&t| (i, t)));
        }
        sorted_output(records, edges, Some(umap), Some(self.stable_window()))
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("complex JSON is serializable")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::fixtures::trefoil;

    #[test]
    fn round_trip_and_field_order() {
        let c = trefoil();
        let text = c.to_json_string();
        let g = text.find("\"generators\"").unwrap();
        let d = text.find("\"differential\"").unwrap();
        assert!(g < d);
        assert!(!text.contains("umap"));
        assert_eq!(FreeUComplex::from_json_str(&text).unwrap(), c);
    }

    #[test]
    fn generators_sorted_on_output() {
        let c = FreeUComplex::from_arrows(
            vec![Generator::new("b", 0, -2), Generator::new("a", 1, -2), Generator::new("c", 0, 0)],
            &[],
        )
        .unwrap();
        let names: Vec<_> = c.to_json().generators.into_iter().map(|g| g.name).collect();
        assert_eq!(names, ["c", "a", "b"]);
    }

    #[test]
    fn unknown_names_rejected() {
        let text = r#"{"generators":[{"name":"a","alexander":0,"maslov":0}],
                       "differential":[{"from":"a","to":"b","upower":0}]}"#;
        assert!(FreeUComplex::from_json_str(text).is_err());
    }
}

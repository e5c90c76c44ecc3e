//! Generated instances and their JSON form.

use std::collections::HashSet;
use std::path::Path;

use serde_json::{json, Value};

use super::json;
use crate::error::{Error, Result};
use crate::lines3::{is_monotone, Monotonicity};
use crate::poly2::{family_class2, FamilyClass};
use crate::polytope3::polytopes_meet;
use crate::{ConvexPoly2, Line3, Polytope3};

#[derive(Clone, Debug, PartialEq)]
pub enum Sets {
    Planar(Vec<ConvexPoly2>),
    Spatial(Vec<Polytope3>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    pub ids: Vec<String>,
    pub sets: Sets,
    pub lines: Vec<Line3>,
    /// Group label of each line (the ruling, for two-family instances).
    pub line_groups: Vec<usize>,
    pub seed: u64,
    /// Generator name and parameters.
    pub meta: Value,
}

fn default_ids(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("K{i}")).collect()
}

impl Instance {
    pub fn planar(sets: Vec<ConvexPoly2>, seed: u64, meta: Value) -> Self {
        Instance { ids: default_ids(sets.len()), sets: Sets::Planar(sets), lines: vec![], line_groups: vec![], seed, meta }
    }

    pub fn spatial(sets: Vec<Polytope3>, lines: Vec<Line3>, seed: u64, meta: Value) -> Self {
        let line_groups = vec![0; lines.len()];
        Instance { ids: default_ids(sets.len()), sets: Sets::Spatial(sets), lines, line_groups, seed, meta }
    }

    pub fn dim(&self) -> usize {
        match self.sets {
            Sets::Planar(_) => 2,
            Sets::Spatial(_) => 3,
        }
    }

    /// Planar sets; empty for spatial instances.
    pub fn polygons(&self) -> &[ConvexPoly2] {
        match &self.sets {
            Sets::Planar(s) => s,
            Sets::Spatial(_) => &[],
        }
    }

    /// Spatial sets; empty for planar instances.
    pub fn polytopes(&self) -> &[Polytope3] {
        match &self.sets {
            Sets::Spatial(s) => s,
            Sets::Planar(_) => &[],
        }
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn generator(&self) -> &str {
        self.meta.get("generator").and_then(Value::as_str).unwrap_or("")
    }

    /// Projections of the sets (the sets themselves when planar).
    pub fn shadows(&self) -> Vec<ConvexPoly2> {
        match &self.sets {
            Sets::Planar(s) => s.clone(),
            Sets::Spatial(s) => s.iter().map(|p| p.shadow()).collect(),
        }
    }

    /// Re-check unique ids and the postcondition declared by the generator.
    pub fn verify(&self) -> Result<()> {
        let n = match &self.sets {
            Sets::Planar(s) => s.len(),
            Sets::Spatial(s) => s.len(),
        };
        if self.ids.len() != n || self.ids.iter().collect::<HashSet<_>>().len() != n {
            return Err(Error::Parse("set ids must be unique, one per set".into()));
        }
        if self.line_groups.len() != self.lines.len() {
            return Err(Error::Parse("one group label per line".into()));
        }
        match self.generator() {
            "cap2" | "flower2" | "strict2_3d"
                if family_class2(&self.shadows()) != FamilyClass::Strict2 => {
                    return Err(Error::NotStrict2);
                }
            _ => {}
        }
        if self.generator() == "strict2_3d" {
            let s = self.polytopes();
            for i in 0..s.len() {
                for j in i + 1..s.len() {
                    if !polytopes_meet(&s[i], &s[j]) {
                        return Err(Error::NotPairwise(i, j));
                    }
                }
            }
        }
        if self.generator() == "monotone3" && !matches!(is_monotone(&self.lines)?, Monotonicity::Monotone(..)) {
            return Err(Error::VerifyFailed("lines are not monotone".into()));
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let sets: Vec<Value> = match &self.sets {
            Sets::Planar(s) => s.iter().map(json::polygon).collect(),
            Sets::Spatial(s) => s.iter().map(json::polytope).collect(),
        };
        let sets: Vec<Value> = sets
            .into_iter()
            .zip(&self.ids)
            .map(|(mut v, id)| {
                v["id"] = json!(id);
                v
            })
            .collect();
        json!({
            "dim": self.dim(),
            "seed": self.seed,
            "meta": self.meta,
            "sets": sets,
            "lines": self.lines.iter().map(json::line3).collect::<Vec<_>>(),
            "line_groups": self.line_groups,
        })
    }

    /// Parse and re-verify.
    pub fn from_json(v: &Value) -> Result<Self> {
        let dim = v.get("dim").and_then(Value::as_u64).ok_or_else(|| Error::Parse("missing dim".into()))?;
        let raw = v.get("sets").and_then(Value::as_array).ok_or_else(|| Error::Parse("missing sets".into()))?;
        let ids: Vec<String> = raw
            .iter()
            .enumerate()
            .map(|(i, s)| s.get("id").and_then(Value::as_str).map_or_else(|| format!("K{i}"), str::to_string))
            .collect();
        let sets = match dim {
            2 => Sets::Planar(raw.iter().map(json::parse_polygon).collect::<Result<_>>()?),
            3 => Sets::Spatial(raw.iter().map(json::parse_polytope).collect::<Result<_>>()?),
            d => return Err(Error::Parse(format!("unsupported dimension {d}"))),
        };
        let lines: Vec<Line3> = match v.get("lines").and_then(Value::as_array) {
            Some(ls) => ls.iter().map(json::parse_line3).collect::<Result<_>>()?,
            None => vec![],
        };
        let line_groups = match v.get("line_groups").and_then(Value::as_array) {
            Some(g) => g
                .iter()
                .map(|x| x.as_u64().map(|u| u as usize).ok_or_else(|| Error::Parse("bad line group".into())))
                .collect::<Result<_>>()?,
            None => vec![0; lines.len()],
        };
        let inst = Instance {
            ids,
            sets,
            lines,
            line_groups,
            seed: v.get("seed").and_then(Value::as_u64).unwrap_or(0),
            meta: v.get("meta").cloned().unwrap_or(Value::Null),
        };
        inst.verify()?;
        Ok(inst)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Instance::from_json(&serde_json::from_str(&text)?)
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        std::fs::write(path, serde_json::to_string_pretty(&self.to_json())? + "\n")?;
        Ok(())
    }
}

//! The JSON input document: schema, validation, and compilation into the
//! toolkit's objects. Every invariant of the constituent types is checked
//! here (group axioms, automorphism and homomorphism laws, grading
//! multiplicativity, relation homogeneity), with diagnostics naming the
//! offending field or triple.
//!
//! Blocks: `field`, `quiver` (or `preset`), `relations`, optional
//! `preprojective: true`, optional `group`, `action`, `grading`,
//! `translation`. Coefficients are exact strings, `"n"` or `"n/d"`.

use std::collections::BTreeMap;

use serde::Deserialize;

use crate::action::{compile_quiver_action, GroupAction, QuiverActionSpec};
use crate::algebra::StructureAlgebra;
use crate::error::Error;
use crate::field::FieldSpec;
use crate::grading::{grading_from_arrow_degrees, GGrading};
use crate::group::FiniteGroup;
use crate::koszul::{preprojective, TranslationQuiver};
use crate::linalg::sv_collect;
use crate::quadratic::{QuadraticAlgebra, Relation};
use crate::quiver::{expand_preset, Quiver};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DocumentSpec {
    pub field: FieldBlock,
    #[serde(default)]
    pub preset: Option<String>,
    #[serde(default)]
    pub quiver: Option<QuiverBlock>,
    #[serde(default)]
    pub relations: Vec<Vec<TermBlock>>,
    #[serde(default)]
    pub preprojective: bool,
    #[serde(default)]
    pub group: Option<GroupBlock>,
    #[serde(default)]
    pub action: Option<BTreeMap<String, ActionElementBlock>>,
    #[serde(default)]
    pub grading: Option<GradingBlock>,
    #[serde(default)]
    pub translation: Option<TranslationBlock>,
}

#[derive(Debug, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum FieldBlock {
    Rational,
    Prime { p: u64 },
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct QuiverBlock {
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowBlock>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowBlock {
    pub name: String,
    pub from: String,
    pub to: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermBlock {
    pub coeff: String,
    pub path: Vec<String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupBlock {
    pub elements: Vec<String>,
    pub table: Vec<Vec<usize>>,
    pub identity: usize,
}

#[derive(Debug, Deserialize, Default)]
#[serde(deny_unknown_fields)]
pub struct ActionElementBlock {
    #[serde(default)]
    pub vertex_perm: BTreeMap<String, String>,
    #[serde(default)]
    pub arrow_images: BTreeMap<String, Vec<TermBlock>>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GradingBlock {
    pub arrow_degree: BTreeMap<String, String>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TranslationBlock {
    pub tau: BTreeMap<String, String>,
}

/// Everything a subcommand might need, compiled and validated.
#[derive(Debug)]
pub struct ParsedDocument {
    pub field: FieldSpec,
    pub quad: QuadraticAlgebra,
    /// flattened algebra; present when the dimensions stabilized at zero
    pub flat: Option<StructureAlgebra>,
    pub group: Option<FiniteGroup>,
    pub action: Option<GroupAction>,
    pub grading: Option<GGrading>,
    /// per-arrow degrees behind `grading`, for the cover presentation
    pub grading_arrow_degrees: Option<Vec<usize>>,
    pub translation: Option<TranslationQuiver>,
    /// echo of an expanded preset, for the report
    pub expanded: Option<String>,
    /// validation observations that are not errors (e.g. a non-faithful action)
    pub flags: Vec<String>,
}

impl ParsedDocument {
    pub fn require_flat(&self) -> Result<&StructureAlgebra, Error> {
        self.flat.as_ref().ok_or_else(|| {
            Error::NotFinite(
                "this operation needs the algebra to be finite-dimensional within the truncation"
                    .into(),
            )
        })
    }

    pub fn require_group_action(&self) -> Result<(&FiniteGroup, &GroupAction), Error> {
        match (&self.group, &self.action) {
            (Some(g), Some(a)) => Ok((g, a)),
            _ => Err(Error::Input(
                "this subcommand needs `group` and `action` blocks".into(),
            )),
        }
    }

    pub fn require_grading(&self) -> Result<&GGrading, Error> {
        self.grading
            .as_ref()
            .ok_or_else(|| Error::Input("this subcommand needs a `grading` block".into()))
    }

    pub fn require_translation(&self) -> Result<&TranslationQuiver, Error> {
        self.translation
            .as_ref()
            .ok_or_else(|| Error::Input("this subcommand needs a `translation` block".into()))
    }
}

/// Parse and validate a document against the schema, building the quadratic
/// algebra at the given truncation.
pub fn parse_input(json: &str, truncation: usize) -> Result<ParsedDocument, Error> {
    let spec: DocumentSpec = serde_json::from_str(json)
        .map_err(|e| Error::Input(format!("schema violation: {e}")))?;
    compile(spec, truncation)
}

fn compile(spec: DocumentSpec, truncation: usize) -> Result<ParsedDocument, Error> {
    let field = match spec.field {
        FieldBlock::Rational => FieldSpec::rational(),
        FieldBlock::Prime { p } => FieldSpec::prime(p)?,
    };
    let mut flags = Vec::new();

    // quiver: preset or explicit
    let (quiver, expanded) = match (&spec.preset, &spec.quiver) {
        (Some(name), None) => {
            let q = expand_preset(name)?;
            let echo = format!(
                "preset {name}: vertices [{}], arrows [{}]",
                q.vertex_names().join(", "),
                q.arrows()
                    .iter()
                    .map(|a| format!(
                        "{}: {} -> {}",
                        a.name,
                        q.vertex_name(a.source),
                        q.vertex_name(a.target)
                    ))
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            (q, Some(echo))
        }
        (None, Some(qb)) => {
            let q = Quiver::new(
                qb.vertices.clone(),
                qb.arrows
                    .iter()
                    .map(|a| (a.name.clone(), a.from.clone(), a.to.clone()))
                    .collect(),
            )?;
            (q, None)
        }
        (Some(_), Some(_)) => {
            return Err(Error::Input("give either `preset` or `quiver`, not both".into()))
        }
        (None, None) => return Err(Error::Input("document needs `preset` or `quiver`".into())),
    };

    // relations / preprojective / translation, mutually exclusive sources
    let explicit_relations = !spec.relations.is_empty();
    if spec.preprojective && explicit_relations {
        return Err(Error::Input(
            "`preprojective: true` derives its own relations; drop the `relations` block".into(),
        ));
    }
    if spec.translation.is_some() && (spec.preprojective || explicit_relations) {
        return Err(Error::Input(
            "`translation` derives mesh relations; drop `relations`/`preprojective`".into(),
        ));
    }

    let mut translation = None;
    let (quiver, relations) = if spec.preprojective {
        let pres = preprojective(&quiver, field)?;
        flags.push(
            "preprojective relations use the signed vertex-wise convention".to_string(),
        );
        (pres.double, pres.relations)
    } else if let Some(tb) = &spec.translation {
        let mut tau = vec![None; quiver.vertex_count()];
        for (from, to) in &tb.tau {
            let fi = quiver
                .vertex_index(from)
                .ok_or_else(|| Error::Input(format!("translation: unknown vertex {from:?}")))?;
            let ti = quiver
                .vertex_index(to)
                .ok_or_else(|| Error::Input(format!("translation: unknown vertex {to:?}")))?;
            tau[fi] = Some(ti);
        }
        let tq = TranslationQuiver::new(quiver.clone(), tau)?;
        let rels = tq.mesh_relations(field)?;
        translation = Some(tq);
        (quiver, rels)
    } else {
        let mut rels = Vec::new();
        for (i, terms) in spec.relations.iter().enumerate() {
            let mut parsed = Vec::new();
            for term in terms {
                let coeff = field.parse(&term.coeff)?;
                let word: Vec<usize> = term
                    .path
                    .iter()
                    .map(|name| {
                        quiver.arrow_index(name).ok_or_else(|| {
                            Error::Input(format!("relation {i}: unknown arrow {name:?}"))
                        })
                    })
                    .collect::<Result<_, _>>()?;
                parsed.push((coeff, word));
            }
            rels.push(
                Relation::new(&quiver, field, parsed)
                    .map_err(|e| Error::Input(format!("relation {i}: {e}")))?,
            );
        }
        (quiver, rels)
    };

    let quad = QuadraticAlgebra::new(quiver, relations, field, truncation)?;
    let flat = match quad.finite_certificate() {
        Some(_) => Some(quad.as_structure_algebra()?),
        None => {
            flags.push(format!(
                "dimensions did not stabilize at zero within truncation {truncation}"
            ));
            None
        }
    };

    let group = match &spec.group {
        Some(gb) => Some(FiniteGroup::new(
            gb.elements.clone(),
            gb.table.clone(),
            gb.identity,
        )?),
        None => None,
    };

    let action = match &spec.action {
        Some(blocks) => {
            let group = group
                .as_ref()
                .ok_or_else(|| Error::Input("`action` needs a `group` block".into()))?;
            let flat_ref = flat.as_ref().ok_or_else(|| {
                Error::NotFinite(
                    "actions are compiled on the flattened algebra; increase the truncation"
                        .into(),
                )
            })?;
            for name in blocks.keys() {
                if group.index_of(name).is_none() {
                    return Err(Error::Input(format!(
                        "action: unknown group element {name:?}"
                    )));
                }
            }
            let mut specs = Vec::with_capacity(group.order());
            for g in 0..group.order() {
                let block = blocks.get(group.name(g));
                let spec_g = match block {
                    None => identity_spec(&quad),
                    Some(b) => {
                        let mut vertex_perm: Vec<usize> =
                            (0..quad.quiver().vertex_count()).collect();
                        for (from, to) in &b.vertex_perm {
                            let fi = quad.quiver().vertex_index(from).ok_or_else(|| {
                                Error::Input(format!("action: unknown vertex {from:?}"))
                            })?;
                            let ti = quad.quiver().vertex_index(to).ok_or_else(|| {
                                Error::Input(format!("action: unknown vertex {to:?}"))
                            })?;
                            vertex_perm[fi] = ti;
                        }
                        let mut arrow_images: Vec<crate::linalg::SparseVec> = (0..quad
                            .quiver()
                            .arrow_count())
                            .map(|a| vec![(a, field.one())])
                            .collect();
                        for (name, image) in &b.arrow_images {
                            let ai = quad.quiver().arrow_index(name).ok_or_else(|| {
                                Error::Input(format!("action: unknown arrow {name:?}"))
                            })?;
                            let mut terms = Vec::new();
                            for t in image {
                                if t.path.len() != 1 {
                                    return Err(Error::Input(format!(
                                        "action: image of {name:?} must be a combination of single arrows"
                                    )));
                                }
                                let target =
                                    quad.quiver().arrow_index(&t.path[0]).ok_or_else(|| {
                                        Error::Input(format!(
                                            "action: unknown arrow {:?} in image of {name:?}",
                                            t.path[0]
                                        ))
                                    })?;
                                terms.push((target, field.parse(&t.coeff)?));
                            }
                            arrow_images[ai] = sv_collect(field, terms);
                        }
                        QuiverActionSpec {
                            vertex_perm,
                            arrow_images,
                        }
                    }
                };
                specs.push(spec_g);
            }
            let action = compile_quiver_action(&quad, flat.as_ref().unwrap(), group.clone(), &specs)?;
            if action.non_faithful {
                flags.push(
                    "action is non-faithful: some non-identity element acts as the identity"
                        .to_string(),
                );
            }
            let _ = flat_ref;
            Some(action)
        }
        None => None,
    };

    let mut grading_arrow_degrees = None;
    let grading = match &spec.grading {
        Some(gb) => {
            let group = group
                .as_ref()
                .ok_or_else(|| Error::Input("`grading` needs a `group` block".into()))?;
            let flat_ref = flat.as_ref().ok_or_else(|| {
                Error::NotFinite(
                    "gradings are compiled on the flattened algebra; increase the truncation"
                        .into(),
                )
            })?;
            let mut arrow_degree = vec![group.identity(); quad.quiver().arrow_count()];
            for (name, deg) in &gb.arrow_degree {
                let ai = quad
                    .quiver()
                    .arrow_index(name)
                    .ok_or_else(|| Error::Input(format!("grading: unknown arrow {name:?}")))?;
                let gi = group
                    .index_of(deg)
                    .ok_or_else(|| Error::Input(format!("grading: unknown group element {deg:?}")))?;
                arrow_degree[ai] = gi;
            }
            let g = grading_from_arrow_degrees(&quad, flat_ref, group.clone(), &arrow_degree)?;
            grading_arrow_degrees = Some(arrow_degree);
            Some(g)
        }
        None => None,
    };

    Ok(ParsedDocument {
        field,
        quad,
        flat,
        group,
        action,
        grading,
        grading_arrow_degrees,
        translation,
        expanded,
        flags,
    })
}

fn identity_spec(quad: &QuadraticAlgebra) -> QuiverActionSpec {
    QuiverActionSpec {
        vertex_perm: (0..quad.quiver().vertex_count()).collect(),
        arrow_images: (0..quad.quiver().arrow_count())
            .map(|a| vec![(a, quad.field.one())])
            .collect(),
    }
}

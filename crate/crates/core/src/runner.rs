//! Job dispatch: parse the input document, run one subcommand, produce a
//! deterministic report. One job per call; nothing is cached between runs.

use crate::action::build_skew;
use crate::document::parse_input;
use crate::error::Error;
use crate::grading::{build_cover, build_smash};
use crate::hochschild::{bar_complex, relative_hh_dims};
use crate::koszul::{compute_koszul_data, hh_via_koszul, koszulity_check, lower_bound};
use crate::report::{fmt_dims, Report};
use crate::verify::{lookup, CheckContext, JobConfig};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Subcommand {
    AlgebraInfo,
    HhBar,
    HhKoszul,
    SkewBuild,
    CoverBuild,
    SmashBuild,
    KoszulCheck,
    KoszulBound { n: usize },
    Verify { name: String },
}

impl Subcommand {
    pub fn label(&self) -> String {
        match self {
            Subcommand::AlgebraInfo => "algebra info".into(),
            Subcommand::HhBar => "hh bar".into(),
            Subcommand::HhKoszul => "hh koszul".into(),
            Subcommand::SkewBuild => "skew build".into(),
            Subcommand::CoverBuild => "cover build".into(),
            Subcommand::SmashBuild => "smash build".into(),
            Subcommand::KoszulCheck => "koszul check".into(),
            Subcommand::KoszulBound { n } => format!("koszul bound --n {n}"),
            Subcommand::Verify { name } => format!("verify {name}"),
        }
    }
}

/// Parse the document and run the subcommand with the given bounds.
pub fn run(json: &str, sub: &Subcommand, cfg: &JobConfig) -> Result<Report, Error> {
    let doc = parse_input(json, cfg.max_idg)?;
    let ctx = CheckContext { doc: &doc, cfg };
    let mut report = match sub {
        Subcommand::Verify { name } => {
            let check = lookup(name).ok_or_else(|| {
                Error::Input(format!(
                    "unknown verification {name:?}; available: {}",
                    available_checks().join(", ")
                ))
            })?;
            check.run(&ctx)?
        }
        Subcommand::AlgebraInfo => algebra_info(&ctx)?,
        Subcommand::HhBar => hh_bar(&ctx)?,
        Subcommand::HhKoszul => hh_koszul(&ctx)?,
        Subcommand::SkewBuild => skew_build(&ctx)?,
        Subcommand::CoverBuild => cover_build(&ctx)?,
        Subcommand::SmashBuild => smash_build(&ctx)?,
        Subcommand::KoszulCheck => koszul_check_cmd(&ctx)?,
        Subcommand::KoszulBound { n } => koszul_bound_cmd(&ctx, *n)?,
    };
    if let Some(echo) = &doc.expanded {
        report.note(echo.clone());
    }
    for flag in &doc.flags {
        report.note(flag.clone());
    }
    Ok(report)
}

pub fn available_checks() -> Vec<&'static str> {
    crate::verify::registry().iter().map(|c| c.name()).collect()
}

fn algebra_info(ctx: &CheckContext<'_>) -> Result<Report, Error> {
    let mut report = Report::new("algebra info", ctx.provenance());
    let doc = ctx.doc;
    let dims = doc.quad.dims();
    let mut rows = vec![
        ("vertices".into(), doc.quad.quiver().vertex_count().to_string()),
        ("arrows".into(), doc.quad.quiver().arrow_count().to_string()),
        ("relations".into(), doc.quad.relations().len().to_string()),
        ("dims by degree".into(), fmt_dims(&dims)),
    ];
    match doc.quad.finite_certificate() {
        Some(z) => {
            let total: usize = dims.iter().sum();
            rows.push(("finite".into(), format!("yes, dims vanish from degree {z}")));
            rows.push(("total dim".into(), total.to_string()));
        }
        None => rows.push(("finite".into(), "not within the truncation".into())),
    }
    if let Some(flat) = &doc.flat {
        rows.push(("center dim".into(), flat.center().dim().to_string()));
    }
    report.table("algebra", rows);
    report.check("per-degree data computed", true, None);
    Ok(report)
}

fn hh_bar(ctx: &CheckContext<'_>) -> Result<Report, Error> {
    let mut report = Report::new("hh bar", ctx.provenance());
    let doc = ctx.doc;
    let flat = doc.require_flat()?;
    let complex = bar_complex(
        flat,
        &crate::action::Bimodule::regular(flat),
        ctx.cfg.max_hdeg,
        ctx.cfg.budget,
    )?;
    let table = complex.cohomology();
    report.check(
        "HH^0 equals the center as a subspace",
        complex.cocycles(0) == flat.center(),
        None,
    );
    report.table(
        "cohomology",
        vec![
            ("dims".into(), fmt_dims(&table.dims)),
            ("cochain dims".into(), fmt_dims(&complex.dims)),
        ],
    );
    // the relative complex agrees whenever both fit the budget
    if doc.quad.finite_certificate().is_some() {
        match relative_hh_dims(&doc.quad, ctx.cfg.max_hdeg, ctx.cfg.budget) {
            Ok(rel) => {
                report.check(
                    "relative complex gives the same dimensions",
                    rel == table.dims,
                    Some(format!("relative {}", fmt_dims(&rel))),
                );
            }
            Err(Error::Budget { .. }) => {
                report.skip("relative complex comparison", "budget exceeded");
            }
            Err(e) => return Err(e),
        }
    }
    Ok(report)
}

fn hh_koszul(ctx: &CheckContext<'_>) -> Result<Report, Error> {
    let mut report = Report::new("hh koszul", ctx.provenance());
    let doc = ctx.doc;
    let quad = &doc.quad;
    let n_max = ctx.cfg.max_hdeg;
    let data = compute_koszul_data(quad, n_max + 1)?;
    let cert = koszulity_check(quad, &data, n_max, ctx.cfg.max_idg)?;
    let hh = hh_via_koszul(quad, &data, n_max, cert.certified)?;
    if cert.certified {
        report.check(
            format!("koszulity certified up to ({n_max}, {})", ctx.cfg.max_idg),
            true,
            None,
        );
    } else {
        report.skip(
            "cohomology equals HH",
            format!(
                "koszulity not certified: first witness at position {}, degree {}",
                cert.witnesses[0].0, cert.witnesses[0].1
            ),
        );
    }
    report.check(
        "dual differentials have no degree-0 image",
        hh.degree_zero_incoming_trivial,
        None,
    );
    let mut rows: Vec<(String, String)> = hh
        .per_weight
        .iter()
        .map(|(q, dims)| (format!("weight {q}"), fmt_dims(dims)))
        .collect();
    if let Some(totals) = &hh.totals {
        rows.push(("totals".into(), fmt_dims(totals)));
    }
    report.table("cohomology by weight", rows);
    // oracle cross-check against the bar complex for finite-dimensional
    // certified-Koszul algebras
    if let (Some(totals), Some(flat), true) = (&hh.totals, &doc.flat, cert.certified) {
        match bar_complex(
            flat,
            &crate::action::Bimodule::regular(flat),
            n_max,
            ctx.cfg.budget,
        ) {
            Ok(complex) => {
                let bar = complex.cohomology().dims;
                report.check(
                    "totals equal bar-complex dimensions",
                    *totals == bar,
                    Some(format!("koszul {} bar {}", fmt_dims(totals), fmt_dims(&bar))),
                );
            }
            Err(Error::Budget { .. }) => {
                report.skip("bar-complex cross-check", "budget exceeded");
            }
            Err(e) => return Err(e),
        }
    }
    Ok(report)
}

fn skew_build(ctx: &CheckContext<'_>) -> Result<Report, Error> {
    let mut report = Report::new("skew build", ctx.provenance());
    let doc = ctx.doc;
    let flat = doc.require_flat()?;
    let (group, action) = doc.require_group_action()?;
    let skew = build_skew(flat, action)?;
    report.check(
        "dim A[G] = dim A . |G|",
        skew.algebra.dim() == flat.dim() * group.order(),
        None,
    );
    report.check("associativity and unit axioms re-verified", true, None);
    report.table(
        "skew algebra",
        vec![
            ("dim A".into(), flat.dim().to_string()),
            ("|G|".into(), group.order().to_string()),
            ("dim A[G]".into(), skew.algebra.dim().to_string()),
            ("center dim".into(), skew.algebra.center().dim().to_string()),
        ],
    );
    Ok(report)
}

fn cover_build(ctx: &CheckContext<'_>) -> Result<Report, Error> {
    let mut report = Report::new("cover build", ctx.provenance());
    let doc = ctx.doc;
    let flat = doc.require_flat()?;
    let grading = doc.require_grading()?;
    let cover = build_cover(flat, grading)?;
    report.check(
        "dim cover = |G| . dim A",
        cover.algebra.dim() == grading.group.order() * flat.dim(),
        None,
    );
    report.check(
        "free translation action by algebra automorphisms, projection invariant",
        true,
        None,
    );
    report.table(
        "covering algebra",
        vec![
            ("dim A".into(), flat.dim().to_string()),
            ("|G|".into(), grading.group.order().to_string()),
            ("dim cover".into(), cover.algebra.dim().to_string()),
            ("center dim".into(), cover.algebra.center().dim().to_string()),
        ],
    );
    if let Some(arrow_degrees) = &doc.grading_arrow_degrees {
        let (cq, crels) = crate::grading::cover_quiver_presentation(
            &doc.quad,
            &grading.group,
            arrow_degrees,
        )?;
        let arrows: Vec<String> = cq
            .arrows()
            .iter()
            .map(|a| {
                format!(
                    "{}: {} -> {}",
                    a.name,
                    cq.vertex_name(a.source),
                    cq.vertex_name(a.target)
                )
            })
            .collect();
        report.table(
            "cover quiver presentation",
            vec![
                ("vertices".into(), cq.vertex_names().join(", ")),
                ("arrows".into(), arrows.join("; ")),
                ("relations".into(), crels.len().to_string()),
            ],
        );
    }
    Ok(report)
}

fn smash_build(ctx: &CheckContext<'_>) -> Result<Report, Error> {
    let mut report = Report::new("smash build", ctx.provenance());
    let doc = ctx.doc;
    let flat = doc.require_flat()?;
    let grading = doc.require_grading()?;
    let smash = build_smash(flat, grading)?;
    report.check(
        "dim smash = |G| . dim A",
        smash.algebra.dim() == grading.group.order() * flat.dim(),
        None,
    );
    report.check(
        "p_g p_h = delta_{g,h} p_h (complete orthogonal idempotents)",
        smash.algebra.idempotents().is_some(),
        None,
    );
    report.table(
        "smash product",
        vec![
            ("dim A".into(), flat.dim().to_string()),
            ("|G|".into(), grading.group.order().to_string()),
            ("dim smash".into(), smash.algebra.dim().to_string()),
            ("center dim".into(), smash.algebra.center().dim().to_string()),
        ],
    );
    Ok(report)
}

fn koszul_check_cmd(ctx: &CheckContext<'_>) -> Result<Report, Error> {
    let mut report = Report::new("koszul check", ctx.provenance());
    let quad = &ctx.doc.quad;
    let n_max = ctx.cfg.max_hdeg;
    let d_max = ctx.cfg.max_idg;
    let data = compute_koszul_data(quad, n_max + 1)?;
    let cert = koszulity_check(quad, &data, n_max, d_max)?;
    report.check(
        format!("augmented Koszul complex exact up to position {n_max}, degree {d_max}"),
        cert.certified,
        if cert.certified {
            Some(format!("verdict: Koszul up to ({n_max}, {d_max})"))
        } else {
            let (pos, t, dim) = cert.witnesses[0];
            Some(format!(
                "homology witness at position {pos}, internal degree {t}, dim {dim}"
            ))
        },
    );
    report.table(
        "K_n dimensions",
        (0..=n_max + 1)
            .map(|n| (format!("dim K_{n}"), data.dim(n).to_string()))
            .collect(),
    );
    Ok(report)
}

fn koszul_bound_cmd(ctx: &CheckContext<'_>, n: usize) -> Result<Report, Error> {
    let mut report = Report::new(format!("koszul bound --n {n}"), ctx.provenance());
    let quad = &ctx.doc.quad;
    let data = compute_koszul_data(quad, n)?;
    let bound = lower_bound(&data, n);
    report.check("bound computed", true, None);
    report.table(
        "lower bound",
        vec![
            (format!("dim (+)_v e_v K_{n} e_v"), bound.to_string()),
            (format!("dim K_{n}"), data.dim(n).to_string()),
        ],
    );
    report.note(format!(
        "for a Koszul algebra of global dimension {n}, dim HH^{n} is at least {bound}"
    ));
    Ok(report)
}

/// Parse-and-run returning the rendered output and exit code, the full CLI
/// path minus argument parsing.
pub fn run_to_output(
    json: &str,
    sub: &Subcommand,
    cfg: &JobConfig,
    json_format: bool,
) -> (String, i32) {
    match run(json, sub, cfg) {
        Ok(report) => {
            let text = if json_format {
                report.to_json()
            } else {
                report.to_text()
            };
            (text, report.exit_code())
        }
        Err(e) => (format!("error: {e}\n"), e.exit_code()),
    }
}

use std::fmt::Write as _;

use basis4::completion::{
    complete_context, orthocomplement, steering_report, tensor_complete, tetrahedron_planes, verify_context,
    Completion, CompletionError, Context, ContextReport, Guarantee,
};
use basis4::decompose::{decomposables_in_plane, factorize, is_decomposable, DecomposeError};
use basis4::hypergraph::{
    analyze_contexts, check_faithfulness, complete_labeling, AnalysisOutcome, FaithfulnessReport, Hypergraph,
};
use basis4::linalg::tensor2;
use basis4::{Field, FloatScalar, GaussianRational, Plane, Ray, Rational};
use serde::Serialize;
use serde_json::{json, Value};

use crate::input::{load_hypergraph, InputError, LoadedHypergraph, Parser, Scalar};
use crate::{Command, Config, HypergraphAction, Mode};

pub struct Report {
    pub human: String,
    pub json: Value,
    pub code: u8,
}

impl Report {
    fn ok(human: String, json: Value) -> Self {
        Report { human, json, code: 0 }
    }

    fn refused(human: String, json: Value) -> Self {
        Report { human, json, code: 1 }
    }
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn invalid(e: impl std::fmt::Display) -> InputError {
    InputError(e.to_string())
}

fn envelope(command: &str, cfg: &Config, field: impl std::fmt::Display, result: Value) -> Value {
    let mode = match cfg.mode {
        Mode::Exact => "exact",
        Mode::Float => "float",
    };
    json!({ "command": command, "field": field.to_string(), "mode": mode, "result": result })
}

pub fn run(command: &Command, cfg: &Config) -> Result<Report, InputError> {
    if let Command::Hypergraph { action } = command {
        return hypergraph(action, cfg);
    }
    match (cfg.mode, cfg.field) {
        (Mode::Float, _) => vectors::<FloatScalar>(command, cfg),
        (Mode::Exact, basis4::FieldKind::Real) => vectors::<Rational>(command, cfg),
        (Mode::Exact, basis4::FieldKind::Complex) => vectors::<GaussianRational>(command, cfg),
    }
}

fn vectors<F: Scalar>(command: &Command, cfg: &Config) -> Result<Report, InputError> {
    let p = Parser { field: cfg.field, eps: cfg.eps };
    let field = cfg.field;
    let (name, mut report) = match command {
        Command::Classify { a, b } => {
            let plane = Plane::new(p.vec4::<F>("a", a)?, p.vec4("b", b)?, field).map_err(invalid)?;
            let c = plane.classify_detailed();
            let mut human = format!("{}\n", c.plane_type);
            if c.tolerance_dependent {
                human.push_str("note: a Gramian entry is within tolerance of zero\n");
            }
            let json = json!({
                "a": plane.a(), "b": plane.b(), "gramian": plane.gramian(),
                "type": c.plane_type, "tolerance_dependent": c.tolerance_dependent,
            });
            ("classify", Report::ok(human, json))
        }
        Command::Locus { a, b } => {
            let (a, b) = (p.vec4::<F>("a", a)?, p.vec4("b", b)?);
            let plane = Plane::new(a.clone(), b.clone(), field).map_err(invalid)?;
            let locus = decomposables_in_plane(&a, &b, field).map_err(invalid)?;
            let mut human = format!("{} in a plane of type {}\n", locus.kind(), plane.classify());
            for ray in locus.rays() {
                match ray {
                    Ray::Exact(z) => writeln!(human, "  {z}").unwrap(),
                    Ray::Approximate { vector, residual } => {
                        writeln!(human, "  ~{vector}  (irrational; residual {residual:.1e})").unwrap()
                    }
                }
            }
            let json = json!({ "plane_type": plane.classify(), "locus": locus });
            ("locus", Report::ok(human, json))
        }
        Command::Complement { e1, e2 } => {
            let (a, b) = orthocomplement(&p.vec4::<F>("e1", e1)?, &p.vec4("e2", e2)?).map_err(invalid)?;
            let t = Plane::new(a.clone(), b.clone(), field).map_err(invalid)?.classify();
            let human = format!("{a}\n{b}\ntype {t}\n");
            ("complement", Report::ok(human, json!({ "basis": [a, b], "type": t })))
        }
        Command::Complete { e1, e2, policy } => {
            let (e1, e2) = (p.vec4::<F>("e1", e1)?, p.vec4("e2", e2)?);
            let report = match complete_context(&e1, &e2, field, *policy).map_err(completion_error)? {
                Completion::Completed(ctx) => {
                    let mut human = String::new();
                    for (k, v) in ctx.vectors.iter().enumerate() {
                        let kind = if is_decomposable(v) { "decomposable" } else { "indecomposable" };
                        writeln!(human, "e{} = {v}  {kind}", k + 1).unwrap();
                    }
                    let decomposable: Vec<bool> = ctx.vectors.iter().map(is_decomposable).collect();
                    Report::ok(
                        human,
                        json!({ "status": "completed", "policy": policy, "vectors": ctx.vectors, "decomposable": decomposable }),
                    )
                }
                Completion::Refused(r) => Report::refused(
                    format!("refused ({}): orthocomplement of type {}: {}\n", r.policy, r.perp_type, r.reason),
                    json!({ "status": "refused", "policy": r.policy, "perp_type": r.perp_type, "reason": r.reason }),
                ),
            };
            ("complete", report)
        }
        Command::Factorize { z } => {
            let z = p.vec4::<F>("z", z)?;
            let report = match factorize(&z) {
                Ok(f) => {
                    let mut human = format!("{} ⊗ {}", f.left, f.right);
                    if f.scale != F::one() {
                        write!(human, " × {}", f.scale).unwrap();
                    }
                    human.push('\n');
                    Report::ok(
                        human,
                        json!({ "decomposable": true, "left": f.left, "right": f.right, "scale": f.scale }),
                    )
                }
                Err(DecomposeError::Indecomposable { residual }) => Report::refused(
                    format!("indecomposable: z1 z4 - z2 z3 = {residual}\n"),
                    json!({ "decomposable": false, "residual": residual }),
                ),
                Err(e) => return Err(invalid(e)),
            };
            ("factorize", report)
        }
        Command::Tensor { s, t, u, v } => {
            let [s, t, u, v] = [("s", s), ("t", t), ("u", u), ("v", v)].map(|(n, x)| p.vec2::<F>(n, x));
            let (s, t, u, v) = (s?, t?, u?, v?);
            let (a, b) = tensor_complete(&s, &t, &u, &v).map_err(completion_error)?;
            let (st, uv) = (tensor2(&s, &t), tensor2(&u, &v));
            let human = format!("s⊗t = {st}\nu⊗v = {uv}\na = u^x⊗t^x = {a}\nb = s^x⊗v^x = {b}\n");
            ("tensor", Report::ok(human, json!({ "s_t": st, "u_v": uv, "a": a, "b": b })))
        }
        Command::Tetrahedron { s, t, u, v } => {
            let [s, t, u, v] = [("s", s), ("t", t), ("u", u), ("v", v)].map(|(n, x)| p.vec2::<F>(n, x));
            let planes = tetrahedron_planes(&s?, &t?, &u?, &v?, field).map_err(completion_error)?;
            let mut human = String::new();
            for plane in &planes {
                writeln!(human, "{:<8} {:<8} {}", plane.labels.0, plane.labels.1, plane.plane_type).unwrap();
            }
            ("tetrahedron", Report::ok(human, to_value(&planes)))
        }
        Command::Steer { e1, e2 } => {
            let r = steering_report(&p.vec4::<F>("e1", e1)?, &p.vec4("e2", e2)?, field, cfg.seed)
                .map_err(completion_error)?;
            let guarantee = match r.guarantee {
                Guarantee::AllFactorizable => "every post-measurement state is a product state",
                Guarantee::AllEntangled => "every post-measurement state is entangled",
                Guarantee::Mixed => "post-measurement states may be product or entangled",
            };
            let s = &r.sampling;
            let human = format!(
                "measured plane type {}\northocomplement type {}\n{guarantee}\nsampling: {} of {} decomposable (seed {}), {}\n",
                r.source_type,
                r.perp_type,
                s.decomposable,
                s.samples,
                s.seed,
                if s.consistent { "consistent" } else { "INCONSISTENT" },
            );
            ("steer", Report::ok(human, to_value(&r)))
        }
        Command::Verify { v1, v2, v3, v4 } => {
            let [a, b, c, d] = [("v1", v1), ("v2", v2), ("v3", v3), ("v4", v4)].map(|(n, x)| p.vec4::<F>(n, x));
            let ctx = Context::projective([a?, b?, c?, d?]);
            let (human, json, passed) = match cfg.mode {
                Mode::Exact => verify_human(&verify_context(&ctx)),
                Mode::Float => verify_human(&verify_context(&ctx.normalized(cfg.eps))),
            };
            let report = if passed { Report::ok(human, json) } else { Report::refused(human, json) };
            ("verify", report)
        }
        Command::Hypergraph { .. } => unreachable!("dispatched separately"),
    };
    report.json = envelope(name, cfg, field, report.json);
    Ok(report)
}

fn completion_error(e: CompletionError) -> InputError {
    invalid(e)
}

fn verify_human<F: Field>(r: &ContextReport<F>) -> (String, Value, bool) {
    let mut human = String::new();
    for &(i, j) in &r.violations {
        writeln!(human, "<v{}|v{}> = {}", i + 1, j + 1, r.gram[i][j]).unwrap();
    }
    for &i in &r.zero_vectors {
        writeln!(human, "v{} is zero", i + 1).unwrap();
    }
    if let (Some(d), Some(t)) = (r.det_abs, r.quarter_trace) {
        writeln!(human, "|det U| = {d:.15}\nTr(UU*)/4 = {t:.15}").unwrap();
    }
    human.push_str(if r.passed { "orthogonal basis\n" } else { "not an orthogonal basis\n" });
    (human, to_value(r), r.passed)
}

fn hypergraph(action: &HypergraphAction, cfg: &Config) -> Result<Report, InputError> {
    let file = match action {
        HypergraphAction::Analyze { file } | HypergraphAction::Complete { file, .. } | HypergraphAction::Check { file } => file,
    };
    let name = file.display().to_string();
    let text = std::fs::read_to_string(file).map_err(|e| InputError(format!("{name}: {e}")))?;
    let float = (cfg.mode == Mode::Float).then_some(cfg.eps);
    match load_hypergraph(&name, &text, float)? {
        LoadedHypergraph::Real(h) => hypergraph_action(action, cfg, &h),
        LoadedHypergraph::Complex(h) => hypergraph_action(action, cfg, &h),
        LoadedHypergraph::Float(h) => hypergraph_action(action, cfg, &h),
    }
}

fn context_label<F: Field>(h: &Hypergraph<F>, c: usize) -> String {
    format!("context {c} [{}]", h.context_ids(c).join(", "))
}

fn hypergraph_action<F: Field>(action: &HypergraphAction, cfg: &Config, h: &Hypergraph<F>) -> Result<Report, InputError> {
    let (name, report) = match action {
        HypergraphAction::Analyze { .. } => {
            let analyses = analyze_contexts(h);
            let mut human = String::new();
            let mut errors = false;
            for a in &analyses {
                let label = context_label(h, a.context);
                match &a.outcome {
                    AnalysisOutcome::MissingPlane(m) => writeln!(
                        human,
                        "{label}: missing plane type {}; known Gramian rank {}; locus {}",
                        m.missing_plane_type,
                        m.known_gramian_rank,
                        m.locus.kind()
                    )
                    .unwrap(),
                    AnalysisOutcome::MissingRay { vector } => writeln!(human, "{label}: missing ray {vector}").unwrap(),
                    AnalysisOutcome::Error { message } => {
                        errors = true;
                        writeln!(human, "{label}: error: {message}").unwrap()
                    }
                }
            }
            let json = to_value(&analyses);
            ("hypergraph analyze", if errors { Report::refused(human, json) } else { Report::ok(human, json) })
        }
        HypergraphAction::Complete { policy, .. } => {
            let out = complete_labeling(h, *policy);
            let mut human = String::new();
            for id in &out.supplied {
                writeln!(human, "{id} = {}", out.hypergraph.label(id).unwrap()).unwrap();
            }
            for r in &out.refusals {
                let label = context_label(h, r.context);
                writeln!(human, "{label}: refused ({}): {}", r.refusal.policy, r.refusal.reason).unwrap();
            }
            for f in &out.failures {
                writeln!(human, "{}: error: {}", context_label(h, f.context), f.message).unwrap();
            }
            let faithful = match &out.faithfulness {
                Some(report) => {
                    human.push_str(&faithfulness_human(report));
                    report.verdict == basis4::hypergraph::Verdict::Faithful
                }
                None => {
                    human.push_str("labeling incomplete\n");
                    false
                }
            };
            let labeled: Value = serde_json::from_str(&out.hypergraph.to_json()).expect("canonical JSON");
            let json = json!({
                "policy": policy,
                "hypergraph": labeled,
                "supplied": out.supplied,
                "refusals": out.refusals,
                "failures": out.failures,
                "faithfulness": out.faithfulness,
            });
            let ok = faithful && out.refusals.is_empty() && out.failures.is_empty();
            ("hypergraph complete", if ok { Report::ok(human, json) } else { Report::refused(human, json) })
        }
        HypergraphAction::Check { .. } => {
            let report = check_faithfulness(h).map_err(invalid)?;
            let human = faithfulness_human(&report);
            let json = to_value(&report);
            let faithful = report.verdict == basis4::hypergraph::Verdict::Faithful;
            ("hypergraph check", if faithful { Report::ok(human, json) } else { Report::refused(human, json) })
        }
    };
    Ok(Report { json: envelope(name, cfg, h.field(), report.json), ..report })
}

fn faithfulness_human(r: &FaithfulnessReport) -> String {
    let mut human = String::new();
    for v in &r.orthogonality_violations {
        writeln!(human, "context {}: <{}|{}> = {}", v.context, v.pair.0, v.pair.1, v.inner_product).unwrap();
    }
    for (x, y) in &r.multiplicities {
        writeln!(human, "{x} and {y} carry proportional labels").unwrap();
    }
    writeln!(human, "{}", match r.verdict {
        basis4::hypergraph::Verdict::Faithful => "faithful",
        basis4::hypergraph::Verdict::Unfaithful => "unfaithful",
    })
    .unwrap();
    human
}

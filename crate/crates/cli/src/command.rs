use std::fmt::Write;
use std::str::FromStr;

use bousfield_core::class::support_bounds;
use bousfield_core::conjecture::{implication_graph, ConjectureEngine};
use bousfield_core::lattice::{to_dot, InverseLimit};
use bousfield_core::localization::{
    bousfield_lattice, category_report, CategoryId, LocalElement, Localizer, DEFAULT_CAP,
};
use bousfield_core::{normalize, Algebra, ClassExpr, Tri};
use serde_json::{json, Value};
use thiserror::Error;

use crate::parse::{parse_expr, ParseError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verb {
    Eval,
    Leq,
    Eq,
    Support,
    Report,
    Lattice,
    Registry,
    Invlimit,
    Graph,
}

impl Verb {
    /// Number of expressions the verb takes.
    pub fn arity(self) -> usize {
        match self {
            Verb::Eval | Verb::Support => 1,
            Verb::Leq | Verb::Eq => 2,
            _ => 0,
        }
    }

    fn supports_dot(self) -> bool {
        matches!(self, Verb::Lattice | Verb::Invlimit | Verb::Graph)
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    Json,
    Dot,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "dot" => Ok(Format::Dot),
            _ => Err(CliError::Usage(format!("unknown format {s:?}"))),
        }
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("in {input:?}: {source}")]
    Parse {
        input: String,
        #[source]
        source: ParseError,
    },
    #[error(transparent)]
    Category(#[from] bousfield_core::localization::CategoryParseError),
    #[error(transparent)]
    Localization(#[from] bousfield_core::localization::LocalizationError),
    #[error(transparent)]
    Lattice(#[from] bousfield_core::LatticeError),
}

impl CliError {
    /// Exit status: 2 for bad input, 1 for failures while computing.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Parse { .. } | CliError::Category(_) => 2,
            CliError::Localization(_) | CliError::Lattice(_) => 1,
        }
    }
}

/// A validated command.
#[derive(Clone, Debug)]
pub struct Command {
    pub verb: Verb,
    pub category: Option<CategoryId>,
    pub exprs: Vec<ClassExpr>,
    pub max_n: u32,
    pub depth: Option<u32>,
    pub cap: u32,
    pub format: Format,
}

impl Command {
    pub fn new(verb: Verb, exprs: &[String]) -> Result<Self, CliError> {
        if exprs.len() != verb.arity() {
            return Err(CliError::Usage(format!(
                "{verb:?} takes {} expression(s), got {}",
                verb.arity(),
                exprs.len()
            )
            .to_lowercase()));
        }
        let exprs = exprs
            .iter()
            .map(|s| {
                parse_expr(s).map_err(|source| CliError::Parse {
                    input: s.clone(),
                    source,
                })
            })
            .collect::<Result<_, _>>()?;
        Ok(Command {
            verb,
            category: None,
            exprs,
            max_n: 3,
            depth: None,
            cap: DEFAULT_CAP,
            format: Format::Text,
        })
    }

    pub fn category(mut self, c: Option<&str>) -> Result<Self, CliError> {
        self.category = c.map(str::parse).transpose()?;
        Ok(self)
    }
}

fn tri_json(t: &Tri) -> Value {
    json!({ "value": t.value().to_string(), "provenance": t.provenance() })
}

fn render(format: Format, text: String, value: Value) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&value).expect("json values serialize");
            s.push('\n');
            s
        }
        _ => text,
    }
}

fn image_text(img: &LocalElement) -> String {
    match img {
        LocalElement::Subset(s) => format!("support {s}"),
        other => other.to_string(),
    }
}

/// Runs a command and returns what it prints.
pub fn run(cmd: &Command) -> Result<String, CliError> {
    if cmd.format == Format::Dot && !cmd.verb.supports_dot() {
        return Err(CliError::Usage(
            "dot output is available for lattice, invlimit and graph".into(),
        ));
    }
    let loc = Localizer::default();
    let cat = cmd.category.unwrap_or(CategoryId::Ambient);
    let out = match cmd.verb {
        Verb::Eval => {
            let e = &cmd.exprs[0];
            if cat == CategoryId::Ambient {
                let nf = normalize(e);
                let text = format!("{nf}\n");
                render(cmd.format, text, json!({ "input": e.to_string(), "normal_form": nf.to_json() }))
            } else {
                let img = loc.localize(cat, e);
                let text = format!("{}\n", image_text(&img));
                render(
                    cmd.format,
                    text,
                    json!({ "input": e.to_string(), "category": cat, "image": img.to_json() }),
                )
            }
        }
        Verb::Leq | Verb::Eq => {
            let (a, b) = (&cmd.exprs[0], &cmd.exprs[1]);
            let t = match (cmd.verb, cat) {
                (Verb::Leq, CategoryId::Ambient) => Algebra::default().leq(a, b),
                (Verb::Leq, _) => loc.leq_local(cat, a, b),
                (_, CategoryId::Ambient) => Algebra::default().eq(a, b),
                _ => loc.eq_local(cat, a, b),
            };
            render(cmd.format, format!("{t}\n"), tri_json(&t))
        }
        Verb::Support => {
            let e = &cmd.exprs[0];
            let b = support_bounds(&normalize(e));
            let text = if b.is_exact() {
                format!("supp = {}\n", b.lower)
            } else {
                format!("{} ⊆ supp ⊆ {}\n", b.lower, b.upper)
            };
            render(
                cmd.format,
                text,
                json!({
                    "input": e.to_string(),
                    "lower": b.lower.to_string(),
                    "upper": b.upper.to_string(),
                    "exact": b.is_exact(),
                }),
            )
        }
        Verb::Report => {
            let cats = match cmd.category {
                Some(c) => vec![c],
                None => CategoryId::shipped(3),
            };
            let table = ConjectureEngine::new(loc).report(&cats, cmd.max_n);
            render(cmd.format, table.to_text(), table.to_json())
        }
        Verb::Lattice => {
            let c = cmd
                .category
                .ok_or_else(|| CliError::Usage("lattice needs --category".into()))?;
            let built = bousfield_lattice(&loc, c, cmd.depth)?;
            match cmd.format {
                Format::Dot => to_dot(&built.lattice, &format!("BL_{c}")),
                f => {
                    let mut text = String::new();
                    let _ = writeln!(
                        text,
                        "BL({c}): {} elements, DL {}, BA {}, model map iso: {}",
                        built.lattice.len(),
                        built.distributive.len(),
                        built.boolean.len(),
                        built.model_map_is_iso()
                    );
                    for x in built.lattice.elements() {
                        let _ = writeln!(
                            text,
                            "  {} ↦ {}",
                            built.lattice.label(x),
                            built.model_map.target().label(built.model_map.apply(x))
                        );
                    }
                    render(f, text, built.to_json())
                }
            }
        }
        Verb::Registry => {
            let c = cmd
                .category
                .ok_or_else(|| CliError::Usage("registry needs --category".into()))?;
            let r = category_report(&loc, c, cmd.cap, cmd.depth);
            render(cmd.format, r.to_text(), r.to_json())
        }
        Verb::Invlimit => {
            let d = cmd
                .depth
                .ok_or_else(|| CliError::Usage("invlimit needs --depth".into()))?;
            let lim = InverseLimit::new(d)?;
            let top = lim.top_component();
            match cmd.format {
                Format::Dot => to_dot(lim.lattice(), &format!("lim_{d}")),
                f => {
                    let commutes = lim.tower_commutes()?;
                    let iso = top.is_isomorphism();
                    let mut text = format!(
                        "inverse limit of 2^{{0..k}}, k ≤ {d}: {} elements\ntower commutes: {commutes}\nisomorphism onto 2^{{0..{d}}}: {iso}\nwitness:\n",
                        lim.lattice().len()
                    );
                    let mut witness = Vec::new();
                    for x in lim.lattice().elements() {
                        let (from, to) = (lim.lattice().label(x), top.target().label(top.apply(x)));
                        let _ = writeln!(text, "  {from} ↦ {to}");
                        witness.push(json!([from, to]));
                    }
                    render(
                        f,
                        text,
                        json!({
                            "depth": d,
                            "size": lim.lattice().len(),
                            "tower_commutes": commutes,
                            "isomorphism": iso,
                            "witness": witness,
                        }),
                    )
                }
            }
        }
        Verb::Graph => {
            let g = implication_graph(cmd.max_n);
            match cmd.format {
                Format::Dot => g.to_dot(),
                f => {
                    let closure = g.closure(&ConjectureEngine::new(loc), false);
                    let mut text = String::new();
                    for e in &g.edges {
                        let from: Vec<String> = e.from.iter().map(ToString::to_string).collect();
                        let _ = writeln!(text, "{} ⇒ {}  [{}]", from.join(" ∧ "), e.to, e.label());
                    }
                    for n in &g.notes {
                        let _ = writeln!(text, "note: {n}");
                    }
                    let _ = writeln!(
                        text,
                        "closure: {} seeded, {} derived, {} contradictions",
                        closure.seeded,
                        closure.derived,
                        closure.contradictions.len()
                    );
                    let mut v = g.to_json();
                    v["closure"] = json!({
                        "seeded": closure.seeded,
                        "derived": closure.derived,
                        "contradictions": closure.contradictions,
                    });
                    render(f, text, v)
                }
            }
        }
    };
    Ok(out)
}

use std::fmt::Write;
use std::path::Path;

use comalg::ccn::{fuse_defects, horizontal_fusion, vertical_fusion, Sector};
use comalg::coherence::{self, CaseKind};
use comalg::fusion::verify_fusion_theorem;
use comalg::intervals::check_defect_axioms;
use comalg::{algebra::tensor_over_central, Algebra, Rational, Subspace};

use crate::adl::{Item, Workspace};
use crate::{config, render};

/// Report text and whether every check passed.
#[derive(Debug)]
pub struct Report {
    pub text: String,
    pub ok: bool,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, ok: true }
    }
}

/// An input error: unreadable or invalid files, unknown names, bad arguments.
#[derive(Debug, thiserror::Error)]
#[error("{0}")]
pub struct InputError(pub String);

type Out = Result<Report, InputError>;

fn lib(e: comalg::Error) -> InputError {
    InputError(e.to_string())
}

fn read(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|e| InputError(format!("{}: {e}", path.display())))
}

pub fn load(path: &Path) -> Result<Workspace, InputError> {
    Workspace::parse(&read(path)?).map_err(|d| InputError(format!("{}:{d}", path.display())))
}

fn sector<'a>(ws: &'a Workspace, name: &str) -> Result<&'a Sector, InputError> {
    ws.sector(name).map_err(InputError)
}

fn name_of(ws: &Workspace, pick: impl Fn(&Item) -> bool) -> String {
    ws.items().iter().find(|(_, i)| pick(i)).map_or_else(|| "?".into(), |(n, _)| n.clone())
}

pub fn validate(path: &Path) -> Out {
    let ws = load(path)?;
    let mut out = String::new();
    for (name, item) in ws.items() {
        let detail = match item {
            Item::Algebra(a) => format!("dim {}", a.dim()),
            Item::Morphism(f) => format!("{} -> {}", f.source().name(), f.target().name()),
            Item::Bimodule(m) => format!("{} - {} dim {}", m.left_alg().name(), m.right_alg().name(), m.dim()),
            Item::Net(n) => n.algebra().name().to_string(),
            Item::Defect(d) => {
                let net = |n| name_of(&ws, |i| matches!(i, Item::Net(m) if m == n));
                format!("{} - {} algebra {}", net(d.left()), net(d.right()), d.algebra().name())
            }
            Item::Sector(s) => format!("dim {}", s.dim()),
        };
        writeln!(out, "OK {} {name} {detail}", item.kind()).unwrap();
    }
    Ok(Report::ok(out))
}

pub fn center(path: &Path, alg: &str) -> Out {
    let ws = load(path)?;
    let z = ws.algebra(alg).map_err(InputError)?.center();
    Ok(Report::ok(render::basis(&z.space().basis_vectors())))
}

/// A subspace given as a morphism name (its image) or as vectors joined by `;`.
fn subspace(ws: &Workspace, a: &Algebra, text: &str) -> Result<Subspace, InputError> {
    if let Ok(f) = ws.morphism(text) {
        if f.target().as_ref() != a {
            return Err(InputError(format!("morphism `{text}` does not land in {}", a.name())));
        }
        return Ok(f.image());
    }
    let mut vectors = Vec::new();
    for part in text.split(';') {
        let v: Vec<Rational> = part
            .split(',')
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map_err(|e: comalg::Error| InputError(format!("subspace `{text}`: {e}")))?;
        if v.len() != a.dim() {
            return Err(InputError(format!("subspace vector `{part}` has {} entries, expected {}", v.len(), a.dim())));
        }
        vectors.push(v);
    }
    Subspace::span(a.dim(), vectors.iter().map(Vec::as_slice)).map_err(lib)
}

pub fn commutant(path: &Path, alg: &str, text: &str) -> Out {
    let ws = load(path)?;
    let a = ws.algebra(alg).map_err(InputError)?;
    let s = subspace(&ws, a, text)?;
    let c = a.commutant(&s).map_err(lib)?;
    Ok(Report::ok(render::basis(&c.space().basis_vectors())))
}

pub fn opposite(path: &Path, alg: &str) -> Out {
    let ws = load(path)?;
    let op = ws.algebra(alg).map_err(InputError)?.opposite();
    Ok(Report::ok(render::algebra(op.name(), &op)))
}

pub fn tensor(path: &Path, a: &str, b: &str, over: &[String]) -> Out {
    let ws = load(path)?;
    let (x, y) = (ws.algebra(a).map_err(InputError)?, ws.algebra(b).map_err(InputError)?);
    let t = match over {
        [] => Algebra::tensor(x, y),
        [kw, c, ja, jb] if kw == "over" => {
            let c = ws.algebra(c).map_err(InputError)?;
            let (ja, jb) = (ws.morphism(ja).map_err(InputError)?, ws.morphism(jb).map_err(InputError)?);
            tensor_over_central(x, y, c, ja, jb).map_err(lib)?.0
        }
        _ => return Err(InputError("expected `over <c> <ja> <jb>` after the two algebras".into())),
    };
    Ok(Report::ok(render::algebra(t.name(), &t)))
}

pub fn fuse(path: &Path, d: &str, e: &str) -> Out {
    let ws = load(path)?;
    let (x, y) = (ws.defect(d).map_err(InputError)?, ws.defect(e).map_err(InputError)?);
    let f = fuse_defects(x, y).map_err(lib)?;
    let name = format!("{d}*{e}");
    let left = name_of(&ws, |i| matches!(i, Item::Net(n) if n == f.left()));
    let right = name_of(&ws, |i| matches!(i, Item::Net(n) if n == f.right()));
    let text = render::algebra(&name, f.algebra()) + &render::defect(&name, &left, &right, &name, f.phi().matrix());
    Ok(Report::ok(text))
}

pub fn verify_fusion(path: &Path, d: &str, b: &str, e: &str) -> Out {
    let ws = load(path)?;
    let (x, net, y) =
        (ws.defect(d).map_err(InputError)?, ws.net(b).map_err(InputError)?, ws.defect(e).map_err(InputError)?);
    if x.right() != net || y.left() != net {
        return Err(InputError(format!("`{d}` and `{e}` do not meet at net `{b}`")));
    }
    let r = verify_fusion_theorem(x.algebra(), net.algebra(), y.algebra(), &x.right_embedding(), &y.left_embedding())
        .map_err(lib)?;
    Ok(Report { text: r.to_string(), ok: r.passed() })
}

pub fn sector_check(path: &Path, name: &str) -> Out {
    let ws = load(path)?;
    let s = sector(&ws, name)?;
    let m = s.bimodule();
    let mut out = format!("sector {name} dim {}\n", s.dim());
    let violations = m.validate();
    for v in &violations {
        writeln!(out, "FAIL bimodule {v}").unwrap();
    }
    if violations.is_empty() {
        writeln!(out, "OK bimodule-axioms").unwrap();
    }
    let agree = Sector::new(s.top().clone(), s.bottom().clone(), m.clone());
    match &agree {
        Ok(_) => {
            let pairs = s.top().left().algebra().dim() * s.top().right().algebra().dim();
            writeln!(out, "OK actions-agree pairs={pairs}").unwrap();
        }
        Err(e) => writeln!(out, "FAIL actions-agree {e}").unwrap(),
    }
    Ok(Report { text: out, ok: violations.is_empty() && agree.is_ok() })
}

pub fn fuse_sectors(path: &Path, x: &str, y: &str, horizontal: bool) -> Out {
    let ws = load(path)?;
    let (h, k) = (sector(&ws, x)?, sector(&ws, y)?);
    let s = if horizontal { horizontal_fusion(h, k) } else { vertical_fusion(h, k) }.map_err(lib)?;
    let name = format!("{x}*{y}");
    let m = s.bimodule();
    Ok(Report::ok(render::bimodule(&name, m.left_alg().name(), m.right_alg().name(), m)))
}

pub fn coherence(suite: &str, seed: u64, cases: Option<usize>, max_dim: Option<usize>) -> Out {
    let kinds = match suite {
        "all" => CaseKind::ALL.to_vec(),
        s => vec![s.parse::<CaseKind>().map_err(lib)?],
    };
    let mut text = String::new();
    let mut ok = true;
    for kind in kinds {
        let reports = coherence::run_suite(
            kind,
            seed,
            cases.unwrap_or(kind.default_cases()),
            max_dim.unwrap_or(kind.default_max_dim()),
        )
        .map_err(lib)?;
        ok &= reports.iter().all(|r| r.passed());
        text.push_str(&coherence::render(&reports));
    }
    Ok(Report { text, ok })
}

pub fn net_axioms(path: &Path, defect: &str, config_path: &Path) -> Out {
    let ws = load(path)?;
    let d = ws.defect(defect).map_err(InputError)?;
    let cfg = config::parse(&read(config_path)?).map_err(|e| InputError(format!("{}:{e}", config_path.display())))?;
    let checks = check_defect_axioms(d, &cfg).map_err(lib)?;
    let mut text = String::new();
    for c in &checks {
        writeln!(text, "{c}").unwrap();
    }
    Ok(Report { text, ok: checks.iter().all(|c| c.passed()) })
}

//! Exact combinatorics of the bicolored circle.
//!
//! Points are `Top` (the point i), `Bot` (−i), or a rational coordinate on
//! one of the two halves: `Black(q)` is `e^{i·arctan q}` and `White(q)` is
//! `−e^{i·arctan q}`. Both charts increase counterclockwise, so the derived
//! order on [`CirclePoint`] is the counterclockwise order starting at `Bot`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::algebra::{Algebra, AlgebraMorphism};
use crate::ccn::Defect;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Subspace};
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CirclePoint {
    Bot,
    Black(Rational),
    Top,
    White(Rational),
}

impl CirclePoint {
    /// Reflection along the horizontal axis.
    pub fn reflect_j(&self) -> CirclePoint {
        match self {
            CirclePoint::Top => CirclePoint::Bot,
            CirclePoint::Bot => CirclePoint::Top,
            CirclePoint::Black(q) => CirclePoint::Black(-q),
            CirclePoint::White(q) => CirclePoint::White(-q),
        }
    }

    /// Reflection along the vertical axis, exchanging the two halves.
    pub fn mirror(&self) -> CirclePoint {
        match self {
            CirclePoint::Top => CirclePoint::Top,
            CirclePoint::Bot => CirclePoint::Bot,
            CirclePoint::Black(q) => CirclePoint::White(-q),
            CirclePoint::White(q) => CirclePoint::Black(-q),
        }
    }

    fn is_marked(&self) -> bool {
        matches!(self, CirclePoint::Top | CirclePoint::Bot)
    }
}

impl fmt::Display for CirclePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CirclePoint::Top => write!(f, "top"),
            CirclePoint::Bot => write!(f, "bot"),
            CirclePoint::Black(q) => write!(f, "b:{q}"),
            CirclePoint::White(q) => write!(f, "w:{q}"),
        }
    }
}

impl FromStr for CirclePoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        match s {
            "top" => Ok(CirclePoint::Top),
            "bot" => Ok(CirclePoint::Bot),
            _ => {
                if let Some(q) = s.strip_prefix("b:") {
                    Ok(CirclePoint::Black(q.parse()?))
                } else if let Some(q) = s.strip_prefix("w:") {
                    Ok(CirclePoint::White(q.parse()?))
                } else {
                    Err(Error::Parse(format!("invalid circle point `{s}`")))
                }
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Orientation {
    Positive,
    Negative,
}

impl Orientation {
    pub fn flip(self) -> Orientation {
        match self {
            Orientation::Positive => Orientation::Negative,
            Orientation::Negative => Orientation::Positive,
        }
    }
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::Positive => "+",
            Orientation::Negative => "-",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ColorClass {
    White,
    Black,
    /// Contains `Top` but not `Bot`.
    GenuinelyBicolored,
    /// Contains `Bot` but not `Top`.
    LowerBicolored,
    /// Contains both `Top` and `Bot`.
    Tricolored,
}

impl ColorClass {
    /// Upper intervals avoid `Bot`.
    pub fn is_upper(self) -> bool {
        matches!(self, ColorClass::White | ColorClass::Black | ColorClass::GenuinelyBicolored)
    }
}

impl fmt::Display for ColorClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ColorClass::White => "white",
            ColorClass::Black => "black",
            ColorClass::GenuinelyBicolored => "genuinely-bicolored",
            ColorClass::LowerBicolored => "lower-bicolored",
            ColorClass::Tricolored => "tricolored",
        })
    }
}

/// The closed counterclockwise arc from `start` to `end`, carrying an
/// orientation (positive means counterclockwise).
///
/// Endpoints are never `Top` or `Bot`: an interval containing a marked
/// point contains a neighborhood of it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CircleInterval {
    start: CirclePoint,
    end: CirclePoint,
    orientation: Orientation,
}

/// Counterclockwise position of `p` measured from `base`.
fn rank<'a>(p: &'a CirclePoint, base: &CirclePoint) -> (bool, &'a CirclePoint) {
    (p < base, p)
}

impl CircleInterval {
    pub fn new(start: CirclePoint, end: CirclePoint, orientation: Orientation) -> Result<Self> {
        if start == end {
            return Err(Error::InvalidInterval("endpoints coincide".into()));
        }
        if start.is_marked() || end.is_marked() {
            return Err(Error::InvalidInterval("a marked point cannot be an endpoint".into()));
        }
        Ok(CircleInterval { start, end, orientation })
    }

    pub fn start(&self) -> &CirclePoint {
        &self.start
    }

    pub fn end(&self) -> &CirclePoint {
        &self.end
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn reversed(&self) -> CircleInterval {
        CircleInterval { orientation: self.orientation.flip(), ..self.clone() }
    }

    pub fn contains_point(&self, p: &CirclePoint) -> bool {
        rank(p, &self.start) <= rank(&self.end, &self.start)
    }

    /// Whether `other ⊆ self` as point sets.
    pub fn contains(&self, other: &CircleInterval) -> bool {
        let s = &self.start;
        rank(&other.start, s) <= rank(&other.end, s) && rank(&other.end, s) <= rank(&self.end, s)
    }

    pub fn classify(&self) -> ColorClass {
        match (self.contains_point(&CirclePoint::Top), self.contains_point(&CirclePoint::Bot)) {
            (true, true) => ColorClass::Tricolored,
            (true, false) => ColorClass::GenuinelyBicolored,
            (false, true) => ColorClass::LowerBicolored,
            (false, false) => match self.start {
                CirclePoint::White(_) => ColorClass::White,
                _ => ColorClass::Black,
            },
        }
    }

    /// Image under the horizontal reflection `j`, which reverses orientation.
    pub fn reflect_j(&self) -> CircleInterval {
        CircleInterval {
            start: self.end.reflect_j(),
            end: self.start.reflect_j(),
            orientation: self.orientation.flip(),
        }
    }

    /// The closure of the complement.
    fn complement(&self) -> CircleInterval {
        CircleInterval { start: self.end.clone(), end: self.start.clone(), orientation: self.orientation }
    }

    /// Whether the two arcs meet at most in endpoints.
    pub fn disjoint_interiors(&self, other: &CircleInterval) -> bool {
        self.complement().contains(other)
    }

    /// The union when it is again an interval with a common orientation.
    pub fn union(&self, other: &CircleInterval) -> Option<CircleInterval> {
        if self.orientation != other.orientation {
            return None;
        }
        if self.contains(other) {
            return Some(self.clone());
        }
        if other.contains(self) {
            return Some(other.clone());
        }
        let (a, b) = (self.contains_point(&other.start), other.contains_point(&self.start));
        let (start, end) = match (a, b) {
            (true, false) => (&self.start, &other.end),
            (false, true) => (&other.start, &self.end),
            _ => return None,
        };
        CircleInterval::new(start.clone(), end.clone(), self.orientation).ok()
    }
}

impl fmt::Display for CircleInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "arc({},{},{})", self.start, self.end, self.orientation)
    }
}

impl FromStr for CircleInterval {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let body = s
            .trim()
            .strip_prefix("arc(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::Parse(format!("expected arc(<point>,<point>,+|-), found `{s}`")))?;
        let parts: Vec<&str> = body.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(Error::Parse(format!("expected three fields in `{s}`")));
        }
        let orientation = match parts[2] {
            "+" => Orientation::Positive,
            "-" => Orientation::Negative,
            o => return Err(Error::Parse(format!("invalid orientation `{o}`"))),
        };
        CircleInterval::new(parts[0].parse()?, parts[1].parse()?, orientation)
    }
}

/// A compact interval `[lo, hi]` of the real line with an orientation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RealInterval {
    lo: Rational,
    hi: Rational,
    orientation: Orientation,
}

impl RealInterval {
    pub fn new(lo: Rational, hi: Rational, orientation: Orientation) -> Result<Self> {
        if lo >= hi {
            return Err(Error::InvalidInterval(format!("[{lo}, {hi}] is empty or degenerate")));
        }
        Ok(RealInterval { lo, hi, orientation })
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }
}

pub fn phi_white(i: &RealInterval) -> CircleInterval {
    CircleInterval {
        start: CirclePoint::White(i.lo.clone()),
        end: CirclePoint::White(i.hi.clone()),
        orientation: i.orientation,
    }
}

pub fn phi_black(i: &RealInterval) -> CircleInterval {
    CircleInterval {
        start: CirclePoint::Black(i.lo.clone()),
        end: CirclePoint::Black(i.hi.clone()),
        orientation: i.orientation,
    }
}

pub fn phi_top(i: &CircleInterval) -> CircleInterval {
    i.clone()
}

pub fn phi_bot(i: &CircleInterval) -> CircleInterval {
    i.reflect_j()
}

/// Preimage under [`phi_white`] of a white arc.
pub fn phi_white_inverse(i: &CircleInterval) -> Option<RealInterval> {
    match (&i.start, &i.end) {
        (CirclePoint::White(lo), CirclePoint::White(hi)) if lo < hi => {
            RealInterval::new(lo.clone(), hi.clone(), i.orientation).ok()
        }
        _ => None,
    }
}

/// Preimage under [`phi_black`] of a black arc.
pub fn phi_black_inverse(i: &CircleInterval) -> Option<RealInterval> {
    match (&i.start, &i.end) {
        (CirclePoint::Black(lo), CirclePoint::Black(hi)) if lo < hi => {
            RealInterval::new(lo.clone(), hi.clone(), i.orientation).ok()
        }
        _ => None,
    }
}

/// The algebra a locally constant defect assigns to an interval.
pub fn evaluate_defect(d: &Defect, i: &CircleInterval) -> Result<Arc<Algebra>> {
    let a = match i.classify() {
        ColorClass::White => d.left().algebra().clone(),
        ColorClass::Black => d.right().algebra().clone(),
        ColorClass::GenuinelyBicolored => d.algebra().clone(),
        c => return Err(Error::UnsupportedClass(c.to_string())),
    };
    Ok(match i.orientation {
        Orientation::Positive => a,
        Orientation::Negative => Arc::new(a.opposite()),
    })
}

/// The homomorphism a locally constant defect assigns to an inclusion
/// `src ⊆ dst` of equally oriented intervals.
pub fn evaluate_embedding(d: &Defect, src: &CircleInterval, dst: &CircleInterval) -> Result<AlgebraMorphism> {
    if !dst.contains(src) || src.orientation != dst.orientation {
        return Err(Error::NotNested);
    }
    let from = evaluate_defect(d, src)?;
    let to = evaluate_defect(d, dst)?;
    let matrix = match (src.classify(), dst.classify()) {
        (s, t) if s == t => Matrix::identity(from.dim()),
        (ColorClass::White, ColorClass::GenuinelyBicolored) => d.left_embedding().matrix().clone(),
        (ColorClass::Black, ColorClass::GenuinelyBicolored) => d.right_embedding().matrix().clone(),
        _ => return Err(Error::NotNested),
    };
    AlgebraMorphism::new(from, to, matrix)
}

/// Finite set of intervals with declared inclusions `(inner, outer)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NetConfig {
    pub intervals: Vec<CircleInterval>,
    pub inclusions: Vec<(usize, usize)>,
}

impl NetConfig {
    pub fn new(intervals: Vec<CircleInterval>, inclusions: Vec<(usize, usize)>) -> Result<Self> {
        for &(i, j) in &inclusions {
            let (Some(a), Some(b)) = (intervals.get(i), intervals.get(j)) else {
                return Err(Error::InconsistentConfig(format!("inclusion ({i},{j}) refers to a missing interval")));
            };
            if !b.contains(a) || a.orientation != b.orientation {
                return Err(Error::InconsistentConfig(format!("interval {i} is not contained in interval {j}")));
            }
        }
        Ok(NetConfig { intervals, inclusions })
    }
}

fn parse_config(intervals: &[&str], inclusions: &[(usize, usize)]) -> NetConfig {
    let ivs = intervals.iter().map(|s| s.parse().expect("valid literal")).collect();
    NetConfig::new(ivs, inclusions.to_vec()).expect("consistent configuration")
}

/// Twelve configurations covering nested, disjoint and overlapping-cover
/// situations on white, black and genuinely bicolored arcs.
pub fn canonical_battery() -> Vec<NetConfig> {
    vec![
        parse_config(&["arc(w:-2,w:-1,+)"], &[]),
        parse_config(&["arc(w:-3,w:-1,+)", "arc(w:-2,w:-1,+)"], &[(1, 0)]),
        parse_config(&["arc(b:0,b:3,+)", "arc(b:1,b:2,+)"], &[(1, 0)]),
        parse_config(&["arc(w:-2,w:-1,+)", "arc(b:0,w:0,+)"], &[(0, 1)]),
        parse_config(&["arc(b:1,b:2,+)", "arc(b:0,w:0,+)"], &[(0, 1)]),
        parse_config(&["arc(b:0,w:-1,+)", "arc(w:-2,w:0,+)", "arc(b:0,w:0,+)"], &[(0, 2), (1, 2)]),
        parse_config(&["arc(b:1,b:2,+)", "arc(w:-2,w:-1,+)", "arc(b:0,w:0,+)"], &[(0, 2), (1, 2)]),
        parse_config(&["arc(b:0,b:1,+)", "arc(b:1,w:0,+)", "arc(b:0,w:0,+)"], &[(0, 2), (1, 2)]),
        parse_config(
            &[
                "arc(b:-1,b:1,+)",
                "arc(b:1,w:-1,+)",
                "arc(w:-1,w:1,+)",
                "arc(b:-1,w:1,+)",
                "arc(b:-1,w:-1,+)",
                "arc(b:1,w:1,+)",
            ],
            &[(0, 3), (1, 3), (2, 3), (4, 3), (5, 3), (0, 4), (1, 4), (1, 5), (2, 5)],
        ),
        parse_config(&["arc(b:0,w:-1,-)", "arc(w:-2,w:0,-)", "arc(b:0,w:0,-)"], &[(0, 2), (1, 2)]),
        parse_config(&["arc(w:-2,w:-1,+)", "arc(b:2,w:-1,+)", "arc(b:0,w:0,+)"], &[(0, 1), (1, 2), (0, 2)]),
        parse_config(&["arc(w:-3,w:-2,+)", "arc(w:-2,w:-1,+)", "arc(w:-3,w:-1,+)"], &[(0, 2), (1, 2)]),
    ]
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomCheck {
    Isotony { inner: usize, outer: usize, kernel_witness: Option<Vec<Rational>> },
    Locality { first: usize, second: usize, within: usize, witness: Option<(usize, usize)> },
    StrongAdditivity { first: usize, second: usize, union: usize, generated_dim: usize, dim: usize },
}

impl AxiomCheck {
    pub fn passed(&self) -> bool {
        match self {
            AxiomCheck::Isotony { kernel_witness, .. } => kernel_witness.is_none(),
            AxiomCheck::Locality { witness, .. } => witness.is_none(),
            AxiomCheck::StrongAdditivity { generated_dim, dim, .. } => generated_dim == dim,
        }
    }
}

fn vec_string(v: &[Rational]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for AxiomCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed() { "OK" } else { "FAIL" };
        match self {
            AxiomCheck::Isotony { inner, outer, kernel_witness } => {
                write!(f, "{tag} isotony ({inner},{outer})")?;
                if let Some(w) = kernel_witness {
                    write!(f, " kernel={}", vec_string(w))?;
                }
                Ok(())
            }
            AxiomCheck::Locality { first, second, within, witness } => {
                write!(f, "{tag} locality ({first},{second}) in {within}")?;
                if let Some((x, y)) = witness {
                    write!(f, " witness=({x},{y})")?;
                }
                Ok(())
            }
            AxiomCheck::StrongAdditivity { first, second, union, generated_dim, dim } => {
                write!(f, "{tag} strong-additivity ({first},{second}) = {union} generated={generated_dim} dim={dim}")
            }
        }
    }
}

/// Checks isotony on declared inclusions, locality on interior-disjoint
/// pairs inside a common member of the configuration, and strong additivity
/// whenever a member is the union of two others, neither containing the
/// other. Pairs involving intervals the defect does not evaluate are
/// skipped.
pub fn check_defect_axioms(d: &Defect, config: &NetConfig) -> Result<Vec<AxiomCheck>> {
    let config = NetConfig::new(config.intervals.clone(), config.inclusions.clone())?;
    let ivs = &config.intervals;
    let mut out = Vec::new();
    for &(inner, outer) in &config.inclusions {
        let f = evaluate_embedding(d, &ivs[inner], &ivs[outer])?;
        let kernel = f.matrix().kernel();
        let kernel_witness = kernel.basis_vectors().into_iter().next();
        out.push(AxiomCheck::Isotony { inner, outer, kernel_witness });
    }
    let n = ivs.len();
    let supported = |i: usize| evaluate_defect(d, &ivs[i]).is_ok();
    let image = |i: usize, k: usize| -> Result<Subspace> { Ok(evaluate_embedding(d, &ivs[i], &ivs[k])?.image()) };
    for i in 0..n {
        for j in i + 1..n {
            if !supported(i) || !supported(j) {
                continue;
            }
            if ivs[i].disjoint_interiors(&ivs[j]) {
                for k in 0..n {
                    if k == i || k == j || !supported(k) {
                        continue;
                    }
                    if evaluate_embedding(d, &ivs[i], &ivs[k]).is_err()
                        || evaluate_embedding(d, &ivs[j], &ivs[k]).is_err()
                    {
                        continue;
                    }
                    let alg = evaluate_defect(d, &ivs[k])?;
                    let (x, y) = (image(i, k)?, image(j, k)?);
                    let witness = first_noncommuting(&alg, &x, &y);
                    out.push(AxiomCheck::Locality { first: i, second: j, within: k, witness });
                }
            }
            if ivs[i].contains(&ivs[j]) || ivs[j].contains(&ivs[i]) {
                continue;
            }
            if let Some(u) = ivs[i].union(&ivs[j]) {
                for (k, iv) in ivs.iter().enumerate() {
                    if *iv != u || !supported(k) {
                        continue;
                    }
                    let alg = evaluate_defect(d, iv)?;
                    let g = alg.generated_subalgebra(&[image(i, k)?, image(j, k)?])?;
                    out.push(AxiomCheck::StrongAdditivity {
                        first: i,
                        second: j,
                        union: k,
                        generated_dim: g.dim(),
                        dim: alg.dim(),
                    });
                }
            }
        }
    }
    Ok(out)
}

fn first_noncommuting(alg: &Algebra, x: &Subspace, y: &Subspace) -> Option<(usize, usize)> {
    let (bx, by) = (x.basis_vectors(), y.basis_vectors());
    for (i, u) in bx.iter().enumerate() {
        for (j, v) in by.iter().enumerate() {
            if alg.multiply(u, v).ok() != alg.multiply(v, u).ok() {
                return Some((i, j));
            }
        }
    }
    None
}

/// The combinatorial roles used to fuse defects on a genuinely bicolored
/// interval `I`, whose start lies on the black half and whose end lies on
/// the white half.
///
/// `C` is the black sub-arc of `I` running from the black endpoint to the
/// point halfway (in angle) towards `Top`, and `C̄` the white sub-arc from the
/// halfway point to the white endpoint. The halfway points are irrational in
/// the rational charts and are not materialized.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionIntervalData {
    pub interval: CircleInterval,
    /// Endpoint of `I` that `C` is adjacent to.
    pub c_boundary: CirclePoint,
    /// Endpoint of `I` that `C̄` is adjacent to.
    pub c_bar_boundary: CirclePoint,
    pub c_class: ColorClass,
    pub c_bar_class: ColorClass,
    /// Lower end of `J`, the preimage of `C` under the black chart.
    pub j_lo: Rational,
    pub j_orientation: Orientation,
    /// Whether `C̄` is the vertical mirror image of `C`.
    pub symmetric: bool,
}

pub fn fusion_interval_data(i: &CircleInterval) -> Result<FusionIntervalData> {
    let c = i.classify();
    if c != ColorClass::GenuinelyBicolored {
        return Err(Error::UnsupportedClass(c.to_string()));
    }
    let CirclePoint::Black(q) = &i.start else {
        return Err(Error::UnsupportedClass("genuinely bicolored arc must start on the black half".into()));
    };
    Ok(FusionIntervalData {
        interval: i.clone(),
        c_boundary: i.start.clone(),
        c_bar_boundary: i.end.clone(),
        c_class: ColorClass::Black,
        c_bar_class: ColorClass::White,
        j_lo: q.clone(),
        j_orientation: Orientation::Positive,
        symmetric: i.end == i.start.mirror(),
    })
}

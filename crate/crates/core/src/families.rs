//! Parameterized graph families: the Brousek family of two triangles joined
//! by three connectors, the counterexamples G1, G2, G3, and random
//! claw-o-heavy samplers.

use std::fmt;
use std::str::FromStr;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::conditions::{is_claw_free, is_claw_o_heavy};
use crate::gamma::{find_bad_p6, heavy_signature, GammaPattern};
use crate::graph::{Graph, GraphBuilder};
use crate::hamilton::{is_hamiltonian, verify_certificate, Channel, HamOptions, ThreeChannelRoles, Verdict};
use crate::induced::{find_induced, Embedding};

#[derive(Debug, Clone, Error)]
pub enum FamilyError {
    #[error("invalid parameter: {0}")]
    BadParameter(String),
    #[error("invalid connector {0:?}: expected T or an integer >= 3")]
    BadConnector(String),
    #[error("generated graph failed validation: {}", .0.failures().join("; "))]
    Validation(Box<ValidationReport>),
    #[error("{strategy} sampler found no graph on {n} vertices within {budget} tries")]
    SamplingExhausted {
        strategy: &'static str,
        n: usize,
        budget: usize,
    },
}

/// How `a_i` and `b_i` are joined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Connector {
    /// Triangle `a_i b_i c_i`.
    Triangle,
    /// Path on `k >= 3` vertices from `a_i` to `b_i`.
    Path(usize),
}

impl Connector {
    /// Vertices contributed beyond `a_i` and `b_i`.
    pub fn internal(self) -> usize {
        match self {
            Connector::Triangle => 1,
            Connector::Path(k) => k - 2,
        }
    }
}

impl fmt::Display for Connector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Connector::Triangle => write!(f, "T"),
            Connector::Path(k) => write!(f, "{k}"),
        }
    }
}

impl FromStr for Connector {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("t") {
            return Ok(Connector::Triangle);
        }
        match s.parse::<usize>() {
            Ok(k) if k >= 3 => Ok(Connector::Path(k)),
            _ => Err(FamilyError::BadConnector(s.to_string())),
        }
    }
}

impl Serialize for Connector {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct BrousekSpec(pub [Connector; 3]);

impl BrousekSpec {
    pub fn order(&self) -> usize {
        6 + self.0.iter().map(|c| c.internal()).sum::<usize>()
    }

    /// Connectors sorted, the representative up to relabelling `i`.
    pub fn canonical(&self) -> BrousekSpec {
        let mut c = self.0;
        c.sort_unstable();
        BrousekSpec(c)
    }
}

impl fmt::Display for BrousekSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.0[0], self.0[1], self.0[2])
    }
}

impl FromStr for BrousekSpec {
    type Err = FamilyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split([',', ' ']).filter(|t| !t.is_empty()).collect();
        let [a, b, c] = parts.as_slice() else {
            return Err(FamilyError::BadParameter(format!(
                "expected three connectors, got {s:?}"
            )));
        };
        Ok(BrousekSpec([a.parse()?, b.parse()?, c.parse()?]))
    }
}

/// Two variants of the G2 middle gateway `y''`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum G2Layout {
    /// `y''` adjacent to all of X, Y, Z and the middle clique.
    #[default]
    SpanningMiddleGateway,
    /// `y''` adjacent to Y and the middle clique only.
    PrivateGateways,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum FamilyParams {
    Brousek {
        spec: BrousekSpec,
    },
    G1 {
        r: usize,
    },
    G2 {
        q: usize,
        r: usize,
        s: usize,
        t: usize,
        layout: G2Layout,
    },
    G3 {
        k: usize,
        r: usize,
    },
}

/// A generated graph with a label for every vertex.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyWitness {
    #[serde(skip)]
    pub graph: Graph,
    pub params: FamilyParams,
    pub labels: Vec<String>,
    pub warnings: Vec<String>,
    /// Apex triangle and channels proving non-hamiltonicity.
    pub roles: Option<ThreeChannelRoles>,
}

impl FamilyWitness {
    pub fn vertex(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Vertices for a list of labels; panics on an unknown label.
    pub fn vertices(&self, labels: &[&str]) -> Vec<usize> {
        labels
            .iter()
            .map(|l| self.vertex(l).unwrap_or_else(|| panic!("unknown label {l}")))
            .collect()
    }
}

/// Vertex allocation by label.
#[derive(Default)]
struct Labeller {
    labels: Vec<String>,
}

impl Labeller {
    fn add(&mut self, label: impl Into<String>) -> usize {
        self.labels.push(label.into());
        self.labels.len() - 1
    }

    fn group(&mut self, prefix: &str, count: usize) -> Vec<usize> {
        (1..=count).map(|i| self.add(format!("{prefix}{i}"))).collect()
    }

    fn find(&self, label: &str) -> usize {
        self.labels.iter().position(|l| l == label).expect("label allocated")
    }
}

pub fn brousek(spec: BrousekSpec) -> Result<FamilyWitness, FamilyError> {
    for c in spec.0 {
        if let Connector::Path(k) = c {
            if k < 3 {
                return Err(FamilyError::BadConnector(k.to_string()));
            }
        }
    }
    let mut lab = Labeller::default();
    let a: Vec<usize> = (1..=3).map(|i| lab.add(format!("a{i}"))).collect();
    let b: Vec<usize> = (1..=3).map(|i| lab.add(format!("b{i}"))).collect();
    let mut internals = Vec::new();
    for (i, c) in spec.0.iter().enumerate() {
        let ids = match c {
            Connector::Triangle => vec![lab.add(format!("c{}", i + 1))],
            Connector::Path(k) => (1..=k - 2).map(|j| lab.add(format!("c{}_{j}", i + 1))).collect(),
        };
        internals.push(ids);
    }
    let mut g = GraphBuilder::new(lab.labels.len());
    g.clique(&a).clique(&b);
    let mut channels = Vec::new();
    for i in 0..3 {
        match spec.0[i] {
            Connector::Triangle => {
                let c = internals[i][0];
                g.clique(&[a[i], b[i], c]);
                channels.push(Channel::Bottleneck {
                    vertex: c,
                    partner: b[i],
                });
            }
            Connector::Path(_) => {
                let mut prev = a[i];
                for &c in &internals[i] {
                    g.edge(prev, c);
                    prev = c;
                }
                g.edge(prev, b[i]);
                channels.push(Channel::Gateway {
                    members: internals[i].clone(),
                    gateway: b[i],
                });
            }
        }
    }
    Ok(FamilyWitness {
        graph: g.build(),
        params: FamilyParams::Brousek { spec },
        labels: lab.labels,
        warnings: Vec::new(),
        roles: Some(ThreeChannelRoles {
            apex: [a[0], a[1], a[2]],
            channels: channels.try_into().expect("three connectors"),
        }),
    })
}

/// Row triangles `{p, p', p''}` for `p` in `rows`, plus the apex triangle.
fn add_rows(lab: &mut Labeller, rows: &[&str]) {
    for p in rows {
        lab.add(*p);
        lab.add(format!("{p}'"));
        lab.add(format!("{p}''"));
    }
}

fn row_bottleneck(lab: &Labeller, p: &str) -> Channel {
    Channel::Bottleneck {
        vertex: lab.find(&format!("{p}'")),
        partner: lab.find(&format!("{p}''")),
    }
}

fn at_least(value: usize, name: &str) -> Result<(), FamilyError> {
    if value < 1 {
        return Err(FamilyError::BadParameter(format!("{name} must be at least 1")));
    }
    Ok(())
}

/// Clique `K_r` (with member `w`), three row triangles, the apex triangle
/// `xyz`, and `x'', y'', z''` joined to the whole clique.
pub fn g1(r: usize) -> Result<FamilyWitness, FamilyError> {
    at_least(r, "r")?;
    let mut warnings = Vec::new();
    if r < 7 {
        warnings.push(format!("r = {r} is below the bound r >= 7"));
    }
    let mut lab = Labeller::default();
    let mut core = vec![lab.add("w")];
    core.extend(lab.group("k", r - 1));
    add_rows(&mut lab, &["x", "y", "z"]);
    let mut g = GraphBuilder::new(lab.labels.len());
    g.clique(&core);
    for p in ["x", "y", "z"] {
        let row = [lab.find(p), lab.find(&format!("{p}'")), lab.find(&format!("{p}''"))];
        g.clique(&row);
        g.join(&[row[2]], &core);
    }
    g.clique(&[lab.find("x"), lab.find("y"), lab.find("z")]);
    let roles = ThreeChannelRoles {
        apex: [lab.find("x"), lab.find("y"), lab.find("z")],
        channels: [
            row_bottleneck(&lab, "x"),
            row_bottleneck(&lab, "y"),
            row_bottleneck(&lab, "z"),
        ],
    };
    Ok(FamilyWitness {
        graph: g.build(),
        params: FamilyParams::G1 { r },
        labels: lab.labels,
        warnings,
        roles: Some(roles),
    })
}

/// Clique `K_r` (with member `w`) fully joined to three independent groups
/// X, Y, Z of size `k`; `x''` is joined to X (likewise `y''`, `z''`); rows
/// and apex as in [`g1`].
pub fn g3(k: usize, r: usize) -> Result<FamilyWitness, FamilyError> {
    at_least(k, "k")?;
    at_least(r, "r")?;
    let mut warnings = Vec::new();
    if k < 8 {
        warnings.push(format!("k = {k} is below the bound k >= 8"));
    }
    if r < 3 * k + 7 {
        warnings.push(format!("r = {r} is below the bound r >= 3k+7 = {}", 3 * k + 7));
    }
    let mut lab = Labeller::default();
    let mut core = vec![lab.add("w")];
    core.extend(lab.group("k", r - 1));
    let groups: Vec<Vec<usize>> = ["x", "y", "z"].iter().map(|p| lab.group(p, k)).collect();
    add_rows(&mut lab, &["x", "y", "z"]);
    let mut g = GraphBuilder::new(lab.labels.len());
    g.clique(&core);
    for (p, group) in ["x", "y", "z"].iter().zip(&groups) {
        let row = [lab.find(p), lab.find(&format!("{p}'")), lab.find(&format!("{p}''"))];
        g.clique(&row);
        g.join(group, &core);
        g.join(&[row[2]], group);
    }
    g.clique(&[lab.find("x"), lab.find("y"), lab.find("z")]);
    let roles = ThreeChannelRoles {
        apex: [lab.find("x"), lab.find("y"), lab.find("z")],
        channels: [
            row_bottleneck(&lab, "x"),
            row_bottleneck(&lab, "y"),
            row_bottleneck(&lab, "z"),
        ],
    };
    Ok(FamilyWitness {
        graph: g.build(),
        params: FamilyParams::G3 { k, r },
        labels: lab.labels,
        warnings,
        roles: Some(roles),
    })
}

/// The G2 construction without validation.
///
/// X ∪ Y and Y ∪ Z are cliques (X and Z are not joined); `x''` sees X and
/// `z''` sees Z; the middle clique `K_q` contains `y'` and is joined to `y`
/// and `y''`; rows at `x` and `z`; apex triangle `xyz`.
pub fn g2_unchecked(q: usize, r: usize, s: usize, t: usize, layout: G2Layout) -> Result<FamilyWitness, FamilyError> {
    for (v, name) in [(q, "q"), (r, "r"), (s, "s"), (t, "t")] {
        at_least(v, name)?;
    }
    let mut lab = Labeller::default();
    let xs = lab.group("x", r);
    let ys = lab.group("y", s);
    let zs = lab.group("z", t);
    let mut middle = vec![lab.add("y'")];
    middle.extend(lab.group("q", q - 1));
    add_rows(&mut lab, &["x"]);
    let y = lab.add("y");
    let y2 = lab.add("y''");
    add_rows(&mut lab, &["z"]);
    let mut g = GraphBuilder::new(lab.labels.len());
    let xy: Vec<usize> = xs.iter().chain(&ys).copied().collect();
    let yz: Vec<usize> = ys.iter().chain(&zs).copied().collect();
    g.clique(&xy).clique(&yz).clique(&middle);
    g.join(&[y, y2], &middle);
    for p in ["x", "z"] {
        g.clique(&[lab.find(p), lab.find(&format!("{p}'")), lab.find(&format!("{p}''"))]);
    }
    g.join(&[lab.find("x''")], &xs);
    g.join(&[lab.find("z''")], &zs);
    match layout {
        G2Layout::SpanningMiddleGateway => {
            let all: Vec<usize> = xs.iter().chain(&ys).chain(&zs).copied().collect();
            g.join(&[y2], &all);
        }
        G2Layout::PrivateGateways => {
            g.join(&[y2], &ys);
        }
    }
    g.clique(&[lab.find("x"), y, lab.find("z")]);
    let roles = ThreeChannelRoles {
        apex: [lab.find("x"), y, lab.find("z")],
        channels: [
            row_bottleneck(&lab, "x"),
            Channel::Gateway {
                members: middle.clone(),
                gateway: y2,
            },
            row_bottleneck(&lab, "z"),
        ],
    };
    let mut warnings = Vec::new();
    if q < 6 {
        warnings.push(format!("q = {q} is below the bound q >= 6"));
    }
    for (v, name) in [(r, "r"), (s, "s")] {
        if v < q + 6 {
            warnings.push(format!("{name} = {v} is below the bound {name} >= q+6 = {}", q + 6));
        }
    }
    if t < q + r + 5 {
        warnings.push(format!("t = {t} is below the bound t >= q+r+5 = {}", q + r + 5));
    }
    Ok(FamilyWitness {
        graph: g.build(),
        params: FamilyParams::G2 { q, r, s, t, layout },
        labels: lab.labels,
        warnings,
        roles: Some(roles),
    })
}

/// The pattern G2 is built to be heavy for.
pub fn g2_pattern() -> GammaPattern {
    GammaPattern::from_codes(&[12, 13, 46, 56])
}

/// [`g2_unchecked`] followed by [`validate_counterexample`]. Heaviness
/// properties are only required when every parameter bound holds.
pub fn g2(q: usize, r: usize, s: usize, t: usize, layout: G2Layout) -> Result<FamilyWitness, FamilyError> {
    let w = g2_unchecked(q, r, s, t, layout)?;
    let gamma = w.warnings.is_empty().then(g2_pattern);
    let report = validate_counterexample(&w, gamma, &HamOptions::default());
    let required_ok = report
        .checks
        .iter()
        .filter(|c| w.warnings.is_empty() || !c.name.contains("heavy"))
        .all(|c| c.passed);
    if required_ok {
        Ok(w)
    } else {
        Err(FamilyError::Validation(Box::new(report)))
    }
}

/// What a claimed induced path must show.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "pattern", rename_all = "snake_case")]
pub enum ClaimRequirement {
    /// The heavy signature equals the pattern, up to reversal.
    Exactly(GammaPattern),
    /// Some listed pair is heavy, in the listed labelling or its reversal.
    AnyOf(GammaPattern),
}

impl ClaimRequirement {
    pub fn holds(self, sig: GammaPattern) -> bool {
        match self {
            ClaimRequirement::Exactly(p) => sig == p || sig.mirror() == p,
            ClaimRequirement::AnyOf(p) => sig.intersects(p) || sig.mirror().intersects(p),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClaimRow {
    pub path: Vec<String>,
    pub requirement: ClaimRequirement,
    pub induced: bool,
    pub signature: Option<GammaPattern>,
    pub passed: bool,
    pub note: Option<String>,
}

/// Claimed induced paths (as labels) and their heavy-position requirements.
pub fn claim_table(w: &FamilyWitness) -> Vec<(Vec<&'static str>, ClaimRequirement)> {
    use ClaimRequirement::{AnyOf, Exactly};
    let p = GammaPattern::from_codes;
    match w.params {
        FamilyParams::G1 { .. } => vec![
            (
                vec!["x'", "x", "y", "y''", "w", "z''"],
                Exactly(p(&[11, 12, 13, 22, 23, 33])),
            ),
            (
                vec!["x", "y", "y''", "w", "z''", "z'"],
                Exactly(p(&[22, 23, 24, 33, 34, 44])),
            ),
            (
                vec!["x'", "x''", "w", "y''", "y", "z"],
                Exactly(p(&[33, 34, 35, 44, 45, 55])),
            ),
            (
                vec!["x''", "w", "y''", "y", "z", "z'"],
                Exactly(p(&[44, 45, 46, 55, 56, 66])),
            ),
        ],
        FamilyParams::G3 { .. } => vec![
            (vec!["w", "x1", "x''", "x", "y", "y'"], AnyOf(p(&[13]))),
            (vec!["x1", "x''", "x", "y", "y''", "y1"], AnyOf(p(&[11, 16]))),
            (vec!["x'", "x", "y", "y''", "y1", "w"], AnyOf(p(&[46]))),
            (vec!["x", "y", "y''", "y1", "w", "z1"], AnyOf(p(&[46]))),
            (vec!["x'", "x''", "x1", "w", "y1", "y''"], AnyOf(p(&[46]))),
            (vec!["x''", "x1", "w", "y1", "y''", "y'"], AnyOf(p(&[13]))),
            (vec!["x1", "w", "y1", "y''", "y", "z"], AnyOf(p(&[13]))),
        ],
        _ => Vec::new(),
    }
}

/// G1's fourth claim row lists seven vertices; its two
/// six-vertex truncations are checked and the matching one reported.
const G1_SEVEN_VERTEX_ROW: [&str; 7] = ["x", "x''", "w", "y''", "y", "z", "z'"];

fn as_path(w: &FamilyWitness, labels: &[&str]) -> Option<[usize; 6]> {
    let ids: Vec<usize> = labels.iter().map(|l| w.vertex(l)).collect::<Option<_>>()?;
    ids.try_into().ok()
}

fn is_induced_p6(g: &Graph, path: &[usize; 6]) -> bool {
    Embedding::new(path.to_vec()).is_induced_copy(g, &Graph::path(6))
}

pub fn check_claims(w: &FamilyWitness) -> Vec<ClaimRow> {
    let g = &w.graph;
    let mut rows = Vec::new();
    for (labels, requirement) in claim_table(w) {
        let path = as_path(w, &labels);
        let induced = path.is_some_and(|p| is_induced_p6(g, &p));
        let signature = path.filter(|_| induced).map(|p| heavy_signature(g, &p));
        let mut note = None;
        if matches!(w.params, FamilyParams::G1 { .. }) && labels[0] == "x''" && labels[1] == "w" {
            let verdicts: Vec<String> = [&G1_SEVEN_VERTEX_ROW[..6], &G1_SEVEN_VERTEX_ROW[1..]]
                .iter()
                .map(|t| {
                    let ok = as_path(w, t)
                        .is_some_and(|p| is_induced_p6(g, &p) && requirement.holds(heavy_signature(g, &p)));
                    format!("{} {}", t.join(" "), if ok { "matches" } else { "does not match" })
                })
                .collect();
            note = Some(format!("truncations of the seven-vertex row: {}", verdicts.join("; ")));
        }
        rows.push(ClaimRow {
            path: labels.iter().map(|s| s.to_string()).collect(),
            requirement,
            induced,
            passed: signature.is_some_and(|s| requirement.holds(s)),
            signature,
            note,
        });
    }
    rows
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct ValidationReport {
    pub params: FamilyParams,
    pub n: usize,
    pub checks: Vec<CheckResult>,
    pub claims: Vec<ClaimRow>,
    pub certificate: Option<crate::hamilton::Certificate>,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed) && self.claims.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| format!("{}: {}", c.name, c.detail))
            .collect();
        out.extend(
            self.claims
                .iter()
                .filter(|c| !c.passed)
                .map(|c| format!("claim path {} not realized", c.path.join(" "))),
        );
        out
    }
}

/// 2-connectivity, claw-o-heaviness, certified non-hamiltonicity, optional
/// P6-γ-heaviness, and the claimed induced paths for G1/G3.
pub fn validate_counterexample(w: &FamilyWitness, gamma: Option<GammaPattern>, opts: &HamOptions) -> ValidationReport {
    let g = &w.graph;
    let mut checks = Vec::new();
    let mut check = |name: &str, passed: bool, detail: String| {
        checks.push(CheckResult {
            name: name.to_string(),
            passed,
            detail,
        })
    };
    let two = g.is_two_connected();
    check(
        "two_connected",
        two,
        if two {
            "no cut vertex".into()
        } else {
            format!("cut vertices {:?}", g.articulation_points())
        },
    );
    let light = crate::conditions::find_light_copy(g, &crate::conditions::patterns::claw());
    check(
        "claw_o_heavy",
        light.is_none(),
        match &light {
            None => "every induced claw has a heavy pair of leaves".into(),
            Some(e) => format!("light claw {:?}", e.vertices()),
        },
    );
    let mut opts = opts.clone();
    if opts.roles.is_none() {
        opts.roles = w.roles.clone();
    }
    let decision = is_hamiltonian(g, &opts);
    let verified = decision.certificate.as_ref().map(|c| verify_certificate(g, c));
    let non_ham = decision.verdict == Verdict::NonHamiltonian && matches!(verified, Some(Ok(())));
    check(
        "non_hamiltonian",
        non_ham,
        match (&decision.verdict, &verified) {
            (Verdict::NonHamiltonian, Some(Ok(()))) => "certificate verified".into(),
            (Verdict::NonHamiltonian, Some(Err(e))) => format!("certificate rejected: {e}"),
            (v, _) => format!("solver verdict {v:?}"),
        },
    );
    if let Some(gamma) = gamma {
        let bad = find_bad_p6(g, gamma);
        check(
            "p6_gamma_heavy",
            bad.is_none(),
            match bad {
                None => format!("every induced P6 meets {gamma}"),
                Some(p) => format!(
                    "bad P6 {}",
                    p.iter().map(|&v| w.labels[v].as_str()).collect::<Vec<_>>().join(" ")
                ),
            },
        );
    }
    ValidationReport {
        params: w.params,
        n: g.order(),
        checks,
        claims: check_claims(w),
        certificate: decision.certificate,
    }
}

/// Sampling strategy for [`random_claw_o_heavy`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Strategy {
    /// Random `G(n, p)` graphs with `p` in `[0.25, 0.85]`, filtered.
    Rejection,
    /// Line graph of a random triangle-free graph with `n` edges.
    LineGraph,
    /// A line graph with random extra edges that keep it claw-o-heavy.
    DensifiedLineGraph,
}

impl Strategy {
    fn name(self) -> &'static str {
        match self {
            Strategy::Rejection => "rejection",
            Strategy::LineGraph => "line-graph",
            Strategy::DensifiedLineGraph => "densified line-graph",
        }
    }
}

pub const SAMPLER_BUDGET: usize = 200_000;

fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// Random triangle-free graph with exactly `m` edges on `h` vertices, if the
/// greedy fill reaches `m`.
fn random_triangle_free(rng: &mut ChaCha8Rng, h: usize, m: usize) -> Option<Vec<(usize, usize)>> {
    let mut pairs = all_pairs(h);
    pairs.shuffle(rng);
    let mut adj = vec![vec![false; h]; h];
    let mut edges = Vec::with_capacity(m);
    for (u, v) in pairs {
        if edges.len() == m {
            break;
        }
        if (0..h).any(|w| adj[u][w] && adj[v][w]) {
            continue;
        }
        adj[u][v] = true;
        adj[v][u] = true;
        edges.push((u, v));
    }
    (edges.len() == m).then_some(edges)
}

/// Line graph: one vertex per edge of `edges`, adjacent when they share an end.
pub fn line_graph(edges: &[(usize, usize)]) -> Graph {
    let mut b = GraphBuilder::new(edges.len());
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            let (a, c) = (edges[i], edges[j]);
            if a.0 == c.0 || a.0 == c.1 || a.1 == c.0 || a.1 == c.1 {
                b.edge(i, j);
            }
        }
    }
    b.build()
}

/// A 2-connected claw-o-heavy graph on `n` vertices, deterministic in `seed`.
pub fn random_claw_o_heavy(n: usize, seed: u64, strategy: Strategy) -> Result<Graph, FamilyError> {
    random_claw_o_heavy_with_budget(n, seed, strategy, SAMPLER_BUDGET)
}

pub fn random_claw_o_heavy_with_budget(
    n: usize,
    seed: u64,
    strategy: Strategy,
    budget: usize,
) -> Result<Graph, FamilyError> {
    if !(4..=16).contains(&n) {
        return Err(FamilyError::BadParameter(format!("sampler order {n} outside 4..=16")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let exhausted = FamilyError::SamplingExhausted {
        strategy: strategy.name(),
        n,
        budget,
    };
    match strategy {
        Strategy::Rejection => {
            let pairs = all_pairs(n);
            for _ in 0..budget {
                let p: f64 = rng.gen_range(0.25..=0.85);
                let edges: Vec<(usize, usize)> = pairs.iter().copied().filter(|_| rng.gen_bool(p)).collect();
                let g = Graph::from_edges(n, &edges).expect("simple edge list");
                if g.is_two_connected() && is_claw_o_heavy(&g) {
                    return Ok(g);
                }
            }
            Err(exhausted)
        }
        Strategy::LineGraph | Strategy::DensifiedLineGraph => {
            for _ in 0..budget {
                let min_h = (1..).find(|h| h * h / 4 >= n).expect("finite");
                let h = rng.gen_range(min_h.max(3)..=n + 1);
                let Some(edges) = random_triangle_free(&mut rng, h, n) else {
                    continue;
                };
                let g = line_graph(&edges);
                if !g.is_two_connected() {
                    continue;
                }
                if strategy == Strategy::LineGraph {
                    return Ok(g);
                }
                return Ok(densify(&mut rng, g));
            }
            Err(exhausted)
        }
    }
}

/// Adds a random number of random non-edges, each kept only if the graph
/// stays claw-o-heavy.
fn densify(rng: &mut ChaCha8Rng, mut g: Graph) -> Graph {
    let mut missing: Vec<(usize, usize)> = all_pairs(g.order())
        .into_iter()
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect();
    missing.shuffle(rng);
    let target = rng.gen_range(1..=missing.len().max(1));
    let mut added = 0;
    for (u, v) in missing {
        if added == target {
            break;
        }
        let h = g.with_edges([(u, v)]);
        if is_claw_o_heavy(&h) {
            g = h;
            added += 1;
        }
    }
    g
}

/// Randomly adds edges to a Brousek member while it stays claw-free and
/// non-hamiltonian (decided by exhaustive search).
pub fn perturbed_brousek(spec: BrousekSpec, seed: u64, max_extra: usize) -> Result<Graph, FamilyError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = brousek(spec)?.graph;
    let mut missing: Vec<(usize, usize)> = all_pairs(g.order())
        .into_iter()
        .filter(|&(u, v)| !g.has_edge(u, v))
        .collect();
    missing.shuffle(&mut rng);
    let mut added = 0;
    for (u, v) in missing {
        if added == max_extra {
            break;
        }
        let h = g.with_edges([(u, v)]);
        if is_claw_free(&h)
            && crate::hamilton::decide_by_search(&h, crate::hamilton::DEFAULT_BUDGET).verdict == Verdict::NonHamiltonian
        {
            g = h;
            added += 1;
        }
    }
    Ok(g)
}

/// Canonical specs (connectors sorted) with at most `max_order` vertices,
/// by increasing order.
pub fn brousek_specs(max_order: usize) -> Vec<BrousekSpec> {
    if max_order < 9 {
        return Vec::new();
    }
    let max_internal = max_order - 6;
    let choices: Vec<Connector> = std::iter::once(Connector::Triangle)
        .chain((3..=max_internal + 2).map(Connector::Path))
        .collect();
    let mut out = Vec::new();
    for (i, &a) in choices.iter().enumerate() {
        for (j, &b) in choices.iter().enumerate().skip(i) {
            for &c in choices.iter().skip(j) {
                let spec = BrousekSpec([a, b, c]);
                if spec.order() <= max_order {
                    out.push(spec);
                }
            }
        }
    }
    out.sort_by_key(|s| (s.order(), *s));
    out
}

/// An induced member of the Brousek family in `g`, smallest first.
pub fn find_induced_brousek(g: &Graph) -> Option<(BrousekSpec, Embedding)> {
    brousek_specs(g.order()).into_iter().find_map(|spec| {
        let pattern = brousek(spec).expect("canonical specs are valid").graph;
        find_induced(g, &pattern).map(|e| (spec, e))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> BrousekSpec {
        s.parse().unwrap()
    }

    #[test]
    fn brousek_counts() {
        let g = brousek(spec("3,3,3")).unwrap().graph;
        assert_eq!((g.order(), g.size()), (9, 12));
        assert!(is_claw_free(&g) && g.is_two_connected());
        let t = brousek(spec("T,T,T")).unwrap().graph;
        assert_eq!((t.order(), t.size()), (9, 15));
        assert!(is_claw_free(&t) && t.is_two_connected());
        assert!("2".parse::<Connector>().is_err());
        assert!("3,3".parse::<BrousekSpec>().is_err());
    }

    #[test]
    fn brousek_roles_certify() {
        for s in ["3,3,3", "T,T,T", "T,4,5", "3,T,6"] {
            let w = brousek(spec(s)).unwrap();
            let roles = w.roles.clone().unwrap();
            assert!(
                crate::hamilton::certify_three_channel(&w.graph, &roles).is_some(),
                "{s}"
            );
        }
    }

    #[test]
    fn g1_degrees() {
        let w = g1(7).unwrap();
        let g = &w.graph;
        assert_eq!(g.order(), 16);
        let d = |l: &str| g.degree(w.vertex(l).unwrap());
        assert_eq!((d("x''"), d("w"), d("x"), d("x'")), (9, 9, 4, 2));
        assert!(w.warnings.is_empty());
        assert_eq!(g1(3).unwrap().warnings.len(), 1);
        assert!(g1(0).is_err());
    }

    #[test]
    fn g1_heavy_vertices() {
        let w = g1(7).unwrap();
        let mut heavy: Vec<&str> = w
            .graph
            .vertices()
            .filter(|&v| w.graph.is_heavy_vertex(v))
            .map(|v| w.labels[v].as_str())
            .collect();
        heavy.sort_unstable();
        assert_eq!(
            heavy,
            vec!["k1", "k2", "k3", "k4", "k5", "k6", "w", "x''", "y''", "z''"]
        );
    }

    #[test]
    fn g1_first_claim_path() {
        let w = g1(7).unwrap();
        let p: [usize; 6] = w.vertices(&["x'", "x", "y", "y''", "w", "z''"]).try_into().unwrap();
        assert!(is_induced_p6(&w.graph, &p));
        assert_eq!(
            heavy_signature(&w.graph, &p),
            GammaPattern::from_codes(&[44, 45, 46, 55, 56, 66])
        );
    }

    #[test]
    fn g1_claims_and_seven_vertex_row() {
        let w = g1(7).unwrap();
        let rows = check_claims(&w);
        assert_eq!(rows.len(), 4);
        assert!(rows.iter().all(|r| r.passed), "{rows:?}");
        let note = rows[3].note.as_deref().unwrap();
        assert!(note.contains("x x'' w y'' y z does not match"));
        assert!(note.contains("x'' w y'' y z z' matches"));
    }

    #[test]
    fn g3_degrees() {
        let w = g3(8, 31).unwrap();
        let g = &w.graph;
        assert_eq!(g.order(), 64);
        let d = |l: &str| g.degree(w.vertex(l).unwrap());
        assert_eq!((d("x1"), d("x''"), d("w")), (32, 10, 54));
        assert_eq!(d("x1") + d("y1"), g.order());
        assert_eq!(d("w") + d("x''"), g.order());
        assert!(w.warnings.is_empty());
    }

    #[test]
    fn g3_heavy_vertices_are_core_and_groups() {
        let w = g3(8, 31).unwrap();
        for v in w.graph.vertices() {
            let l = &w.labels[v];
            let expected = !l.contains('\'') && l.len() > 1 || l == "w";
            assert_eq!(w.graph.is_heavy_vertex(v), expected, "{l}");
        }
    }

    #[test]
    fn g2_order_and_roles() {
        let w = g2_unchecked(6, 12, 12, 23, G2Layout::default()).unwrap();
        assert_eq!(w.graph.order(), 61);
        assert!(w.warnings.is_empty());
        let roles = w.roles.clone().unwrap();
        assert!(crate::hamilton::certify_three_channel(&w.graph, &roles).is_some());
        let small = g2_unchecked(1, 1, 1, 1, G2Layout::default()).unwrap();
        assert_eq!(small.warnings.len(), 4);
    }

    #[test]
    fn claim_requirements() {
        let sig = GammaPattern::from_codes(&[11, 12]);
        assert!(ClaimRequirement::AnyOf(GammaPattern::from_codes(&[66])).holds(sig));
        assert!(ClaimRequirement::Exactly(GammaPattern::from_codes(&[56, 66])).holds(sig));
        assert!(!ClaimRequirement::Exactly(GammaPattern::from_codes(&[11])).holds(sig));
    }

    #[test]
    fn sampler_is_deterministic_and_valid() {
        for strategy in [Strategy::Rejection, Strategy::LineGraph, Strategy::DensifiedLineGraph] {
            for seed in 0..5 {
                let a = random_claw_o_heavy(9, seed, strategy).unwrap();
                let b = random_claw_o_heavy(9, seed, strategy).unwrap();
                assert_eq!(a, b);
                assert!(a.is_two_connected() && is_claw_o_heavy(&a));
                if strategy == Strategy::LineGraph {
                    assert!(is_claw_free(&a));
                }
            }
        }
        assert!(random_claw_o_heavy(3, 0, Strategy::Rejection).is_err());
        assert!(matches!(
            random_claw_o_heavy_with_budget(16, 1, Strategy::Rejection, 0),
            Err(FamilyError::SamplingExhausted { .. })
        ));
    }

    #[test]
    fn specs_and_member_search() {
        let specs = brousek_specs(10);
        assert_eq!(specs[0], spec("T,T,T"));
        assert!(specs.iter().all(|s| s.order() <= 10 && *s == s.canonical()));
        // orders 9 and 10: {T,3}^3 multisets (4) and one connector bumped (3)
        assert_eq!(specs.len(), 4 + 3);
        let g = brousek(spec("3,T,4")).unwrap().graph;
        let (found, e) = find_induced_brousek(&g).unwrap();
        assert_eq!(found, spec("T,3,4"));
        assert_eq!(e.order(), 10);
        assert!(find_induced_brousek(&Graph::complete(8)).is_none());
    }

    #[test]
    fn perturbation_keeps_properties() {
        let g = perturbed_brousek(spec("3,3,4"), 7, 3).unwrap();
        assert!(is_claw_free(&g) && g.is_two_connected());
        assert_eq!(
            crate::hamilton::decide_by_search(&g, 1_000_000).verdict,
            Verdict::NonHamiltonian
        );
    }
}

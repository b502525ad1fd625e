use crate::{suites, Ctx, Outcome};
use algcomb::exactla::{binomial, parse_rational};
use algcomb::ffpoly::{self, MultiPoly, PointSetFq};
use algcomb::geomx::{self, Hyperplane, LineR3, PointConfig};
use algcomb::nullsatz::{self, GridSets, Group, ZeroSumInstance};
use algcomb::ramsey::{self, Construction, TwoColoring};
use algcomb::setfam::{self, FamilyKind, SetFamily};
use algcomb::specgraph::{self as sg, Graph};
use algcomb::io::{de_rational_rows, de_rationals};
use algcomb::{Error, Result};
use clap::{Args, Subcommand, ValueEnum};
use serde::Deserialize;
use serde_json::{json, Value};

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Set-family checkers and extremal searches.
    #[command(subcommand)]
    Setfam(SetfamCmd),
    /// Polynomials over prime fields: roots, Chevalley–Warning, Kakeya.
    #[command(subcommand)]
    Ffpoly(FfpolyCmd),
    /// Nullstellensatz certificates, sumsets, zero-sum problems.
    #[command(subcommand)]
    Nullsatz(NullsatzCmd),
    /// Spectral and exhaustive graph checks.
    #[command(subcommand)]
    Specgraph(SpecgraphCmd),
    /// Adjacency spectrum of a graph.
    Spectra(GraphArg),
    /// Ramsey colourings: checks, constructions, sampling.
    #[command(subcommand)]
    Ramsey(RamseyCmd),
    /// Convex and incidence geometry with exact rational certificates.
    #[command(subcommand)]
    Geomx(GeomxCmd),
    /// Run a module's acceptance battery.
    Suite {
        #[arg(value_enum)]
        name: SuiteName,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteName {
    All,
    Setfam,
    Ffpoly,
    Nullsatz,
    Specgraph,
    Ramsey,
    Geomx,
}

pub fn dispatch(cmd: &Command, ctx: &Ctx) -> Result<Outcome> {
    match cmd {
        Command::Setfam(c) => setfam_cmd(c, ctx),
        Command::Ffpoly(c) => ffpoly_cmd(c, ctx),
        Command::Nullsatz(c) => nullsatz_cmd(c, ctx),
        Command::Specgraph(c) => specgraph_cmd(c, ctx),
        Command::Spectra(g) => spectra(&g.load(ctx)?, g.label(), ctx),
        Command::Ramsey(c) => ramsey_cmd(c, ctx),
        Command::Geomx(c) => geomx_cmd(c, ctx),
        Command::Suite { name } => suites::run(*name, ctx),
    }
}

fn bad(msg: impl Into<String>) -> Error {
    Error::InvalidInput(msg.into())
}

fn from_value<T: serde::de::DeserializeOwned>(v: Value, what: &str) -> Result<T> {
    serde_json::from_value(v).map_err(|e| bad(format!("{what}: {e}")))
}

fn rationals(v: &[String]) -> Result<geomx::Point> {
    v.iter().map(|s| parse_rational(s)).collect()
}

// ---------------------------------------------------------------- setfam

#[derive(Args, Debug)]
pub struct KindArgs {
    /// oddtown | separated | weakly_separated | lambda_fischer | l_fischer_modp | l_fischer_int |
    /// uniform_intersecting | uniform_l_fischer_int | uniform_l_fischer_modp
    #[arg(long)]
    kind: String,
    #[arg(long)]
    lambda: Option<u64>,
    /// Allowed intersection sizes, comma separated.
    #[arg(long, value_delimiter = ',')]
    l: Vec<u64>,
    #[arg(long)]
    p: Option<u64>,
    #[arg(long)]
    size: Option<u64>,
}

impl KindArgs {
    fn kind(&self) -> Result<FamilyKind> {
        let mut v = json!({ "kind": self.kind.replace('-', "_") });
        if let Some(x) = self.lambda {
            v["lambda"] = json!(x);
        }
        if !self.l.is_empty() {
            v["l"] = json!(self.l);
        }
        if let Some(x) = self.p {
            v["p"] = json!(x);
        }
        if let Some(x) = self.size {
            v["size"] = json!(x);
        }
        from_value::<FamilyKind>(v, "family kind")?.normalized()
    }
}

#[derive(Subcommand, Debug)]
pub enum SetfamCmd {
    /// Check a family (--in {"ground": m, "sets": [[1,2],...]}) against a kind.
    Check(KindArgs),
    /// Largest family of a kind on [m], by exhaustive search.
    Max {
        #[command(flatten)]
        kind: KindArgs,
        #[arg(long)]
        m: usize,
    },
    /// The theorem's upper bound for a kind on [m].
    Bound {
        #[command(flatten)]
        kind: KindArgs,
        #[arg(long)]
        m: usize,
    },
    /// A seeded random valid family, checked against the bound.
    Random {
        #[command(flatten)]
        kind: KindArgs,
        #[arg(long)]
        m: usize,
    },
}

fn setfam_cmd(c: &SetfamCmd, ctx: &Ctx) -> Result<Outcome> {
    match c {
        SetfamCmd::Check(k) => {
            let kind = k.kind()?;
            let f: SetFamily = ctx.json()?;
            let check = setfam::check_family(&f, &kind, &ctx.guards)?;
            let bound = setfam::theorem_bound(&kind, f.ground()).ok();
            let within = bound.map(|b| f.len() as u128 <= b);
            let ok = check.valid && within != Some(false);
            Outcome::new(
                &json!({ "kind": kind, "size": f.len(), "valid": check.valid, "witness": check.witness,
                         "bound": bound.map(|b| b.to_string()), "within_bound": within }),
                ok,
            )
        }
        SetfamCmd::Max { kind, m } => {
            let kind = kind.kind()?;
            let e = setfam::max_family_brute(*m, &kind, &ctx.guards)?;
            let bound = setfam::theorem_bound(&kind, *m)?;
            let ok = e.max_size as u128 <= bound;
            Outcome::new(&json!({ "kind": kind, "m": m, "extremal": e, "bound": bound.to_string() }), ok)
        }
        SetfamCmd::Bound { kind, m } => {
            let kind = kind.kind()?;
            let bound = setfam::theorem_bound(&kind, *m)?;
            Outcome::new(&json!({ "kind": kind, "m": m, "bound": bound.to_string() }), true)
        }
        SetfamCmd::Random { kind, m } => {
            let kind = kind.kind()?;
            let mut rng = algcomb::rng(ctx.seed);
            let f = setfam::random_valid_family(&kind, *m, &mut rng, &ctx.guards)?;
            let check = setfam::check_family(&f, &kind, &ctx.guards)?;
            let bound = setfam::theorem_bound(&kind, *m)?;
            let ok = check.valid && f.len() as u128 <= bound;
            Outcome::new(&json!({ "kind": kind, "family": f, "valid": check.valid, "bound": bound.to_string() }), ok)
        }
    }
}

// ---------------------------------------------------------------- ffpoly

#[derive(Subcommand, Debug)]
pub enum FfpolyCmd {
    /// Count the zeros of a polynomial (--in {"p","n","terms":[{"e":[..],"c":..}]}).
    Roots,
    /// Common zeros of a system (--in {"p","n","polys":[...]}) and the divisibility check.
    Cw,
    /// Is a point set (--in {"p","n","points":[[..]]}) a Kakeya set?
    Kakeya,
    /// Smallest Kakeya set in F_p^n by exhaustive scan.
    KakeyaMin {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        n: usize,
    },
    /// C(a, b) mod p via Lucas, cross-checked against the exact binomial.
    Lucas {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        b: u64,
        #[arg(long)]
        p: u64,
    },
    /// Σ_{x ∈ F_p} x^r.
    PowerSum {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        r: u64,
    },
    /// a^p ≡ a (mod p).
    Fermat {
        #[arg(long)]
        a: u64,
        #[arg(long)]
        p: u64,
    },
}

#[derive(Deserialize)]
struct CwInput {
    p: u64,
    n: usize,
    polys: Vec<MultiPoly>,
}

#[derive(Deserialize)]
struct FqPoints {
    p: u64,
    n: usize,
    points: Vec<Vec<u64>>,
}

fn ffpoly_cmd(c: &FfpolyCmd, ctx: &Ctx) -> Result<Outcome> {
    let g = &ctx.guards;
    match c {
        FfpolyCmd::Roots => {
            let f: MultiPoly = ctx.json()?;
            let r = ffpoly::count_roots_brute(&f, g)?;
            let ok = r.vanishes_identically || r.bound.is_none_or(|b| r.count <= b);
            Outcome::new(&r, ok)
        }
        FfpolyCmd::Cw => {
            let i: CwInput = ctx.json()?;
            let r = ffpoly::chevalley_warning_count(&i.polys, i.p, i.n, g)?;
            let ok = !r.degree_condition || r.divisible;
            Outcome::new(&r, ok)
        }
        FfpolyCmd::Kakeya => {
            let i: FqPoints = ctx.json()?;
            let r = ffpoly::is_kakeya(&PointSetFq::new(i.p, i.n, i.points)?, g)?;
            let ok = r.is_kakeya;
            Outcome::new(&r, ok)
        }
        FfpolyCmd::KakeyaMin { p, n } => {
            let r = ffpoly::kakeya_min_brute(*p, *n, g)?;
            let ok = parse_rational(&r.lower_bound)? <= parse_rational(&r.minimum.to_string())?;
            Outcome::new(&r, ok)
        }
        FfpolyCmd::Lucas { a, b, p } => {
            let value = ffpoly::lucas_binom(*a, *b, *p)?;
            let exact = binomial(*a, *b);
            let direct = (&exact % *p).to_string();
            let ok = direct == value.to_string();
            Outcome::new(&json!({ "a": a, "b": b, "p": p, "value": value, "binomial": exact.to_string(), "agrees": ok }), ok)
        }
        FfpolyCmd::PowerSum { p, r } => {
            let value = ffpoly::power_sum(*p, *r)?;
            Outcome::new(&json!({ "p": p, "r": r, "value": value }), true)
        }
        FfpolyCmd::Fermat { a, p } => {
            let r = ffpoly::fermat_check(*a, *p)?;
            let ok = r.holds;
            Outcome::new(&r, ok)
        }
    }
}

// ---------------------------------------------------------------- nullsatz

#[derive(Subcommand, Debug)]
pub enum NullsatzCmd {
    /// Decompose f = Σ h_i g_i for f vanishing on a grid (--in {"f": poly, "sets": [[..],..]}).
    Certificate,
    /// A grid point where f is nonzero, given a top monomial exponent t (--in {"f","sets","t"}).
    Witness,
    /// Exhaustive Cauchy–Davenport and restricted-sumset checks mod p.
    Sumset {
        #[arg(long)]
        p: u64,
    },
    /// Davenport constant of Z_{n1} × … by exhaustive search.
    Davenport {
        #[arg(long, value_delimiter = ',', required = true)]
        moduli: Vec<u64>,
    },
    /// Least length forcing a zero-sum subsequence of length n.
    EgzConst {
        #[arg(long, value_delimiter = ',', required = true)]
        moduli: Vec<u64>,
        #[arg(long)]
        n: u64,
    },
    /// Find n of the given 2n−1 integers summing to 0 mod n.
    Egz {
        #[arg(long)]
        n: u64,
        #[arg(long, value_delimiter = ',', required = true)]
        values: Vec<u64>,
    },
    /// Kemnitz congruences for a sequence in Z_p² (--in {"moduli":[p,p],"elements":[[..],..]}).
    Kemnitz,
    /// A 3-regular subgraph of a 4-regular graph plus an edge.
    Berge {
        #[command(flatten)]
        graph: GraphArg,
        /// Use a seeded random 4-regular graph on this many vertices plus one edge.
        #[arg(long)]
        random: Option<usize>,
    },
}

#[derive(Deserialize)]
struct GridInput {
    f: MultiPoly,
    sets: Vec<Vec<u64>>,
    #[serde(default)]
    t: Vec<u32>,
}

fn nullsatz_cmd(c: &NullsatzCmd, ctx: &Ctx) -> Result<Outcome> {
    let g = &ctx.guards;
    match c {
        NullsatzCmd::Certificate => {
            let i: GridInput = ctx.json()?;
            let grid = GridSets::new(i.f.modulus(), i.sets)?;
            let cert = nullsatz::cn_certificate(&i.f, &grid, g)?;
            let ok = cert.remainder(&i.f).is_zero() && cert.degrees_ok(&i.f);
            Outcome::new(&cert, ok)
        }
        NullsatzCmd::Witness => {
            let i: GridInput = ctx.json()?;
            let grid = GridSets::new(i.f.modulus(), i.sets)?;
            let x = nullsatz::cn_witness(&i.f, &grid, &i.t, g)?;
            let value = i.f.eval(&x)?;
            let ok = value != 0 && x.iter().zip(grid.sets()).all(|(v, s)| s.contains(v));
            Outcome::new(&json!({ "point": x, "value": value }), ok)
        }
        NullsatzCmd::Sumset { p } => {
            let r = nullsatz::sumset_bound_check(*p, g)?;
            let ok = r.holds();
            Outcome::new(&r, ok)
        }
        NullsatzCmd::Davenport { moduli } => {
            let r = nullsatz::davenport_g(&Group::new(moduli.clone())?, g)?;
            let ok = r.expected.is_none_or(|e| e == r.g);
            Outcome::new(&r, ok)
        }
        NullsatzCmd::EgzConst { moduli, n } => {
            let r = nullsatz::f_const_brute(&Group::new(moduli.clone())?, *n, g)?;
            let ok = r.expected.is_none_or(|e| e == r.f);
            Outcome::new(&r, ok)
        }
        NullsatzCmd::Egz { n, values } => {
            let w = nullsatz::egz_find(values, *n)?;
            let sum: u128 = w.indices.iter().map(|&i| values[i] as u128).sum();
            let ok = w.indices.len() as u64 == *n && sum.is_multiple_of(*n as u128);
            Outcome::new(&w, ok)
        }
        NullsatzCmd::Kemnitz => {
            let inst: ZeroSumInstance = ctx.json()?;
            let r = nullsatz::kemnitz_congruences(&inst, g)?;
            let ok = r.holds();
            Outcome::new(&r, ok)
        }
        NullsatzCmd::Berge { graph, random } => {
            let gr = match random {
                Some(n) => nullsatz::random_four_regular_plus_edge(*n, &mut algcomb::rng(ctx.seed)),
                None => graph.load(ctx)?,
            };
            let r = nullsatz::berge_sauer_find(&gr, g)?;
            let ok = three_regular(&gr, &r.edges);
            Outcome::new(&json!({ "graph": gr, "subgraph": r, "degrees_valid": ok }), ok)
        }
    }
}

/// Every vertex touched by the chosen edges has degree exactly 3 in them.
pub fn three_regular(g: &Graph, edges: &[usize]) -> bool {
    let mut deg = vec![0usize; g.n()];
    for &e in edges {
        let Some(&(u, v)) = g.edges().get(e) else { return false };
        deg[u] += 1;
        deg[v] += 1;
    }
    !edges.is_empty() && deg.iter().all(|&d| d == 0 || d == 3)
}

// ---------------------------------------------------------------- specgraph

#[derive(Args, Debug)]
pub struct GraphArg {
    /// petersen | kneser:m,r | complete:n | cycle:n | path:n | star:k | hypercube:n | windmill:k.
    /// Without it the graph is read from --in (JSON {"n","edges"} or an edge list).
    #[arg(long)]
    graph: Option<String>,
}

impl GraphArg {
    pub fn load(&self, ctx: &Ctx) -> Result<Graph> {
        match &self.graph {
            Some(spec) => named_graph(spec),
            None => algcomb::io::parse_graph(&ctx.text()?),
        }
    }

    fn label(&self) -> String {
        self.graph.clone().unwrap_or_else(|| "input".into())
    }
}

pub fn named_graph(spec: &str) -> Result<Graph> {
    let (name, args) = spec.split_once(':').unwrap_or((spec, ""));
    let nums: Vec<usize> = if args.is_empty() {
        Vec::new()
    } else {
        args.split(',').map(|a| a.trim().parse().map_err(|_| bad(format!("bad graph parameter `{a}`")))).collect::<Result<_>>()?
    };
    let arity = |k: usize| {
        if nums.len() == k {
            Ok(())
        } else {
            Err(bad(format!("graph `{name}` takes {k} parameter(s)")))
        }
    };
    let small = |n: usize| {
        if n <= 20 {
            Ok(n as u32)
        } else {
            Err(bad("hypercube dimension must be at most 20"))
        }
    };
    match name {
        "petersen" => arity(0).map(|_| sg::petersen()),
        "kneser" => arity(2).and_then(|_| sg::kneser(nums[0], nums[1])),
        "complete" => arity(1).map(|_| Graph::complete(nums[0])),
        "cycle" => arity(1).map(|_| Graph::cycle(nums[0])),
        "path" => arity(1).map(|_| Graph::path(nums[0])),
        "star" => arity(1).map(|_| Graph::star(nums[0])),
        "hypercube" => arity(1).and_then(|_| small(nums[0])).map(sg::hypercube),
        "windmill" => arity(1).map(|_| sg::windmill(nums[0])),
        _ => Err(bad(format!("unknown graph `{name}`"))),
    }
}

/// Round away last-bit noise so integral eigenvalues print as integers.
pub fn clean(x: f64) -> Value {
    let r = (x * 1e9).round() / 1e9;
    if r.fract() == 0.0 && r.abs() < 1e15 {
        json!(r as i64)
    } else {
        json!(r)
    }
}

fn spectra(g: &Graph, label: String, ctx: &Ctx) -> Result<Outcome> {
    let s = sg::spectrum(g, &ctx.guards)?;
    let eigenvalues: Vec<Value> = s.eigenvalues.iter().map(|&x| clean(x)).collect();
    Outcome::new(&json!({ "graph": label, "n": s.n, "eigenvalues": eigenvalues }), true)
}

#[derive(Subcommand, Debug)]
pub enum SpecgraphCmd {
    /// Adjacency spectrum.
    Spectrum(GraphArg),
    /// Exact independence number against the Hoffman bound (regular graphs).
    Hoffman(GraphArg),
    /// Exact max cut against the averaging and eigenvalue bounds.
    Maxcut(GraphArg),
    /// Chromatic polynomial and chromatic number.
    Chromatic(GraphArg),
    /// Greedy colouring with at most Δ + 1 colours.
    Greedy(GraphArg),
    /// Spectrum of the complement of a regular graph.
    Complement(GraphArg),
    /// MᵀM and MMᵀ identities for the incidence matrix.
    Incidence(GraphArg),
    /// Search for an isomorphism to a second graph.
    Isomorphic {
        #[command(flatten)]
        graph: GraphArg,
        /// Second graph, same syntax as --graph.
        #[arg(long)]
        other: String,
    },
    /// Kneser spectrum formula against numeric eigenvalues.
    Kneser {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        r: usize,
    },
    /// Intersecting-family bound C(m−1, r−1) from the Kneser spectrum.
    Ekr {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        r: usize,
    },
    /// Signed hypercube identity and the exhaustive induced-degree scan.
    Sensitivity {
        #[arg(long)]
        n: u32,
    },
    /// Every friendship graph up to nmax vertices is a windmill.
    Friendship {
        #[arg(long, default_value_t = 7)]
        nmax: usize,
    },
    /// K_10 is not an edge-disjoint union of three Petersen graphs.
    Schwenk,
    /// A consistent edge colouring of K_{2^t}.
    Consistent {
        #[arg(long)]
        t: u32,
    },
}

fn specgraph_cmd(c: &SpecgraphCmd, ctx: &Ctx) -> Result<Outcome> {
    let gd = &ctx.guards;
    match c {
        SpecgraphCmd::Spectrum(a) => spectra(&a.load(ctx)?, a.label(), ctx),
        SpecgraphCmd::Hoffman(a) => {
            let g = a.load(ctx)?;
            let h = sg::hoffman_bound(&g, gd)?;
            let (alpha, set) = sg::independence_brute(&g, gd)?;
            let ok = alpha as f64 <= h.bound + 1e-9;
            Outcome::new(&json!({ "hoffman": h, "alpha": alpha, "independent_set": set }), ok)
        }
        SpecgraphCmd::Maxcut(a) => {
            let r = sg::maxcut_brute(&a.load(ctx)?, gd)?;
            let ok = r.holds;
            Outcome::new(&r, ok)
        }
        SpecgraphCmd::Chromatic(a) => {
            let g = a.load(ctx)?;
            let poly = sg::chromatic_polynomial(&g, gd)?;
            let chi = sg::chromatic_number(&g, gd)?;
            let ok = match chi {
                Some(k) => poly.eval(k as i64) > 0 && (k == 0 || poly.eval(k as i64 - 1) == 0),
                None => true,
            };
            let values: Vec<String> = (0..=4).map(|k| poly.eval(k).to_string()).collect();
            Outcome::new(&json!({ "polynomial": poly, "chromatic_number": chi, "values_0_to_4": values }), ok)
        }
        SpecgraphCmd::Greedy(a) => {
            let r = sg::greedy_coloring_bound(&a.load(ctx)?)?;
            let ok = r.holds;
            Outcome::new(&r, ok)
        }
        SpecgraphCmd::Complement(a) => {
            let r = sg::complement_spectrum_check(&a.load(ctx)?, gd)?;
            let ok = r.holds;
            Outcome::new(&r, ok)
        }
        SpecgraphCmd::Incidence(a) => {
            let r = sg::incidence_identities_check(&a.load(ctx)?)?;
            let ok = r.edge_side && r.vertex_side;
            Outcome::new(&r, ok)
        }
        SpecgraphCmd::Isomorphic { graph, other } => {
            let (g, h) = (graph.load(ctx)?, named_graph(other)?);
            let map = sg::find_isomorphism(&g, &h);
            let ok = map.as_ref().is_none_or(|m| {
                g.edges().iter().all(|&(u, v)| h.edges().iter().any(|&(x, y)| (x, y) == (m[u], m[v]) || (y, x) == (m[u], m[v])))
            });
            Outcome::new(&json!({ "isomorphic": map.is_some(), "mapping": map }), ok)
        }
        SpecgraphCmd::Kneser { m, r } => {
            let rep = sg::kneser_spectrum_check(*m, *r, gd)?;
            let ok = rep.matches;
            Outcome::new(&rep, ok)
        }
        SpecgraphCmd::Ekr { m, r } => {
            let rep = sg::ekr_via_kneser(*m, *r, gd)?;
            let ok = rep.holds;
            Outcome::new(&rep, ok)
        }
        SpecgraphCmd::Sensitivity { n } => {
            let rep = sg::sensitivity_check(*n, gd)?;
            let ok = rep.holds;
            Outcome::new(&rep, ok)
        }
        SpecgraphCmd::Friendship { nmax } => {
            let rep = sg::friendship_brute_scan(*nmax, gd)?;
            let ok = rep.all_windmills;
            Outcome::new(&rep, ok)
        }
        SpecgraphCmd::Schwenk => {
            let rep = sg::schwenk_obstruction_check(gd)?;
            let ok = rep.holds;
            Outcome::new(&rep, ok)
        }
        SpecgraphCmd::Consistent { t } => {
            let c = sg::consistent_coloring(*t, gd)?;
            let ok = sg::is_consistent(&c);
            Outcome::new(&json!({ "colouring": c, "colours": c.colour_count(), "consistent": ok }), ok)
        }
    }
}

// ---------------------------------------------------------------- ramsey

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConstructionName {
    Naive,
    Nagy,
    FranklWilson,
}

#[derive(Subcommand, Debug)]
pub enum RamseyCmd {
    /// A (3,3)-Ramsey colouring of K_5 and exhaustion of all colourings of K_6.
    VerifyR33,
    /// Check a colouring (--in {"n": N, "bits": "0101…"}; bit 1 = blue) for red K_red / blue K_blue.
    Check {
        #[arg(long)]
        red: usize,
        #[arg(long)]
        blue: usize,
    },
    /// Build an explicit colouring and (unless --no-verify) check it has no monochromatic K_n.
    Construct {
        #[arg(long, value_enum)]
        kind: ConstructionName,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long)]
        no_verify: bool,
    },
    /// Sample uniform colourings of K_N, N = ⌊2^(n/2)⌋, and count (n,n)-Ramsey ones.
    Sample {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 200)]
        trials: u64,
    },
    /// Recurrence upper bound on R(m, n), with the known value when tabulated.
    Bound {
        #[arg(long)]
        m: u32,
        #[arg(long)]
        n: u32,
    },
}

fn ramsey_cmd(c: &RamseyCmd, ctx: &Ctx) -> Result<Outcome> {
    let gd = &ctx.guards;
    match c {
        RamseyCmd::VerifyR33 => {
            let r = ramsey::verify_r33();
            let ok = r.k5_valid && r.k6_all_fail && r.r33 == Some(6);
            Outcome::new(&r, ok)
        }
        RamseyCmd::Check { red, blue } => {
            let col: TwoColoring = ctx.json()?;
            let r = ramsey::is_ramsey_coloring(&col, *red, *blue, gd)?;
            let ok = r.valid;
            Outcome::new(&r, ok)
        }
        RamseyCmd::Construct { kind, n, p, no_verify } => {
            let kind = match kind {
                ConstructionName::Naive => Construction::Naive { n: *n },
                ConstructionName::Nagy => Construction::Nagy { n: *n },
                ConstructionName::FranklWilson => {
                    Construction::FranklWilson { p: p.ok_or_else(|| bad("frankl-wilson needs --p"))?, n: *n }
                }
            };
            let built = ramsey::construct(kind, gd)?;
            let check = if *no_verify {
                None
            } else {
                Some(ramsey::is_ramsey_coloring(&built.coloring, built.avoids, built.avoids, gd)?)
            };
            let ok = check.as_ref().is_none_or(|c| c.valid);
            Outcome::new(&json!({ "construction": built, "check": check }), ok)
        }
        RamseyCmd::Sample { n, trials } => {
            let r = ramsey::probabilistic_lower_sample(*n, *trials, ctx.seed, gd)?;
            Outcome::new(&r, true)
        }
        RamseyCmd::Bound { m, n } => {
            let bound = ramsey::ramsey_recurrence_bound(*m, *n)?;
            let known = ramsey::KNOWN_RAMSEY
                .iter()
                .find(|&&(a, b, _)| (a, b) == (*m, *n) || (b, a) == (*m, *n))
                .map(|&(_, _, v)| v);
            let ok = known.is_none_or(|k| k <= bound);
            Outcome::new(
                &json!({ "m": m, "n": n, "recurrence_bound": bound.to_string(), "known": known.map(|k| k.to_string()) }),
                ok,
            )
        }
    }
}

// ---------------------------------------------------------------- geomx

#[derive(Subcommand, Debug)]
pub enum GeomxCmd {
    /// Is target in conv(points)? (--in {"d","points","target"})
    Hull,
    /// Reduce a hull certificate to at most d+1 affinely independent points (--in as for hull).
    Caratheodory,
    /// Radon partition of at least d+2 points (--in {"d","points"}).
    Radon,
    /// Pairwise (d+1)-wise intersections against a common point (--in {"d","sets":[{"d","points"},..]}).
    Helly,
    /// Halfspace depth of a point (--in {"d","points","target"}).
    Depth,
    /// A point of depth ≥ ⌈n/(d+1)⌉ (--in {"d","points"}).
    Centerpoint,
    /// A colourful simplex containing target (--in {"classes":[{"d","points"},..],"target"}).
    Colorful,
    /// Partition into r parts with intersecting hulls (--in {"d","points"}).
    Tverberg {
        #[arg(long)]
        r: usize,
    },
    /// Lines spanned by planar points (--in {"d":2,"points"}).
    Sylvester,
    /// Joints of lines in R³ (--in {"lines":[{"base","dir"},..]}) or the axis grid.
    Joints {
        #[arg(long)]
        grid: Option<u32>,
    },
    /// Two-distance check (--in {"d","points"}) or the standard example in R^(n+1).
    TwoDistance {
        #[arg(long)]
        example: Option<usize>,
    },
    /// Unit vectors where every triple has an orthogonal pair (--in {"d","points"}).
    NearlyOrthogonal,
    /// ‖v‖² = Σ ⟨v, y⟩² over an orthonormal basis (--in {"v":[..],"basis":{"d","points"}}).
    Parseval,
    /// Hyperplanes covering {0,1}^n but not the origin (--in {"n","hyperplanes":[{"normal","offset"},..]}).
    Cover,
    /// Random projection distortion (--in {"points":[[x,..],..]}).
    JlProject {
        #[arg(long)]
        k: usize,
    },
    /// Exact rank inequalities for near-identity matrices and Hadamard powers.
    JlRank {
        #[arg(long, default_value_t = 10)]
        n: usize,
        #[arg(long, default_value = "1/10")]
        eps: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
}

#[derive(Deserialize)]
struct Cfg {
    d: usize,
    #[serde(deserialize_with = "de_rational_rows")]
    points: Vec<Vec<String>>,
}

impl Cfg {
    fn build(&self) -> Result<PointConfig> {
        PointConfig::from_strings(self.d, &self.points)
    }
}

#[derive(Deserialize)]
struct Targeted {
    #[serde(flatten)]
    cfg: Cfg,
    #[serde(deserialize_with = "de_rationals")]
    target: Vec<String>,
}

#[derive(Deserialize)]
struct HellyInput {
    d: usize,
    sets: Vec<Cfg>,
}

#[derive(Deserialize)]
struct ColorfulInput {
    classes: Vec<Cfg>,
    #[serde(deserialize_with = "de_rationals")]
    target: Vec<String>,
}

#[derive(Deserialize)]
struct LinesInput {
    lines: Vec<LineR3>,
}

#[derive(Deserialize)]
struct ParsevalInput {
    #[serde(deserialize_with = "de_rationals")]
    v: Vec<String>,
    basis: Cfg,
}

#[derive(Deserialize)]
struct CoverInput {
    n: usize,
    hyperplanes: Vec<Hyperplane>,
}

#[derive(Deserialize)]
struct FloatPoints {
    points: Vec<Vec<f64>>,
}

fn geomx_cmd(c: &GeomxCmd, ctx: &Ctx) -> Result<Outcome> {
    let gd = &ctx.guards;
    match c {
        GeomxCmd::Hull => {
            let i: Targeted = ctx.json()?;
            let (p, t) = (i.cfg.build()?, rationals(&i.target)?);
            let cert = geomx::hull_membership(&t, &p)?;
            let ok = cert.as_ref().is_none_or(|c| c.verify(&p, &t));
            Outcome::new(&json!({ "member": cert.is_some(), "certificate": cert }), ok)
        }
        GeomxCmd::Caratheodory => {
            let i: Targeted = ctx.json()?;
            let (p, t) = (i.cfg.build()?, rationals(&i.target)?);
            let Some(cert) = geomx::hull_membership(&t, &p)? else {
                return Err(Error::Precondition("target is not in the convex hull".into()));
            };
            let reduced = geomx::caratheodory_reduce(&cert, &p)?;
            let ok = reduced.verify(&p, &t) && reduced.support() <= p.dim() + 1;
            Outcome::new(&json!({ "certificate": cert, "reduced": reduced }), ok)
        }
        GeomxCmd::Radon => {
            let p = ctx.json::<Cfg>()?.build()?;
            let r = geomx::radon_partition(&p)?;
            let ok = r.left_certificate.verify(&p, &r.witness) && r.right_certificate.verify(&p, &r.witness);
            Outcome::new(&r, ok)
        }
        GeomxCmd::Helly => {
            let i: HellyInput = ctx.json()?;
            let sets = i.sets.iter().map(Cfg::build).collect::<Result<Vec<_>>>()?;
            let r = geomx::helly_verify(&sets, i.d, gd)?;
            let ok = !r.small_intersections || r.common_point.is_some();
            Outcome::new(&r, ok)
        }
        GeomxCmd::Depth => {
            let i: Targeted = ctx.json()?;
            let r = geomx::halfspace_depth(&rationals(&i.target)?, &i.cfg.build()?)?;
            Outcome::new(&r, true)
        }
        GeomxCmd::Centerpoint => {
            let r = geomx::centerpoint(&ctx.json::<Cfg>()?.build()?, gd)?;
            let ok = r.holds;
            Outcome::new(&r, ok)
        }
        GeomxCmd::Colorful => {
            let i: ColorfulInput = ctx.json()?;
            let classes = i.classes.iter().map(Cfg::build).collect::<Result<Vec<_>>>()?;
            let t = rationals(&i.target)?;
            let r = geomx::colorful_caratheodory(&classes, &t, gd)?;
            let ok = r.verify(&classes, &t);
            Outcome::new(&r, ok)
        }
        GeomxCmd::Tverberg { r } => {
            let p = ctx.json::<Cfg>()?.build()?;
            let rep = geomx::tverberg_partition(&p, *r, gd)?;
            let ok = rep.verify(&p);
            Outcome::new(&rep, ok)
        }
        GeomxCmd::Sylvester => {
            let r = geomx::sylvester_count(&ctx.json::<Cfg>()?.build()?, gd)?;
            let ok = r.holds;
            Outcome::new(&r, ok)
        }
        GeomxCmd::Joints { grid } => match grid {
            Some(n) => {
                let (lines, expected) = geomx::joints_grid(*n);
                let r = geomx::joints(&lines, gd)?;
                let ok = r.joints as u64 == expected;
                Outcome::new(&json!({ "grid": n, "expected": expected, "joints": r }), ok)
            }
            None => {
                let i: LinesInput = ctx.json()?;
                Outcome::new(&geomx::joints(&i.lines, gd)?, true)
            }
        },
        GeomxCmd::TwoDistance { example } => {
            let p = match example {
                Some(n) => geomx::two_distance_example(*n),
                None => ctx.json::<Cfg>()?.build()?,
            };
            let r = geomx::two_distance_check(&p)?;
            let ok = r.within_bound && (example.is_none() || r.is_two_distance);
            Outcome::new(&r, ok)
        }
        GeomxCmd::NearlyOrthogonal => {
            let r = geomx::nearly_orthogonal_check(&ctx.json::<Cfg>()?.build()?, gd)?;
            let ok = !r.nearly_orthogonal || r.within_bound;
            Outcome::new(&r, ok)
        }
        GeomxCmd::Parseval => {
            let i: ParsevalInput = ctx.json()?;
            let r = geomx::parseval_check(&rationals(&i.v)?, &i.basis.build()?)?;
            let ok = r.holds;
            Outcome::new(&r, ok)
        }
        GeomxCmd::Cover => {
            let i: CoverInput = ctx.json()?;
            let r = geomx::hyperplane_cover_check(&i.hyperplanes, i.n, gd)?;
            let ok = r.holds;
            Outcome::new(&r, ok)
        }
        GeomxCmd::JlProject { k } => {
            let i: FloatPoints = ctx.json()?;
            Outcome::new(&geomx::jl_project(&i.points, *k, ctx.seed)?, true)
        }
        GeomxCmd::JlRank { n, eps, trials } => {
            let r = geomx::jl_rank_checks(*n, &parse_rational(eps)?, ctx.seed, *trials)?;
            let ok = r.jl1_holds && r.jl2_holds;
            Outcome::new(&r, ok)
        }
    }
}

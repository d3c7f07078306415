use std::error::Error as StdError;
use std::fs;
use std::path::Path;

use serde_json::{json, Value};

use skewcode::code::generator_skew_polynomial;
use skewcode::distance::min_distance;
use skewcode::field::FieldOp;
use skewcode::format::{self, int_list};
use skewcode::maps::{self, MapMatrix};
use skewcode::repro::{table, verify_paper};
use skewcode::ring::{list_ideals, DEFAULT_AUT_CAP};
use skewcode::ring_code::{
    build_case_two, count_theta_cyclic_coprime, is_ring_skew_constacyclic, is_sigma_closed,
    ring_generator_polynomial,
};
use skewcode::search::{search_field, search_ring, SearchLimits};
use skewcode::{
    Elem, FieldAutomorphism, FieldSpec, LinearCode, RingAutomorphism, RingLinearCode,
    RingSpec, RingTwist, ShiftMap, SkewPoly, TwistContext,
};

use crate::args::*;

type CliResult<T> = Result<T, Box<dyn StdError>>;

/// What a command produced: text for humans, JSON for `--format struct`,
/// and whether the exit status should signal success.
pub struct Output {
    pub text: String,
    pub json: Value,
    pub ok: bool,
}

impl Output {
    fn new(text: String, json: Value) -> Self {
        Output { text, json, ok: true }
    }
}

pub fn run(cli: &Cli) -> CliResult<Output> {
    let field = || format::parse_field_flag(&cli.field);
    match &cli.command {
        Command::Field(a) => field_cmd(&field()?, a),
        Command::Skew(c) => skew_cmd(&field()?, c),
        Command::Code(c) => code_cmd(cli, c),
        Command::Ring(c) => ring_cmd(&field()?, c),
        Command::Ringcode(c) => ringcode_cmd(cli, c),
        Command::Maps(c) => maps_cmd(cli, c),
        Command::VerifyPaper(a) => verify_cmd(cli, a),
        Command::Search(a) => search_cmd(cli, &field()?, a),
    }
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn write(path: &Path, body: &str) -> CliResult<()> {
    fs::write(path, body).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn poly_text(f: &[Elem]) -> String {
    skewcode::poly::render(f)
}

// ---------------------------------------------------------------- field

fn field_cmd(f: &FieldSpec, a: &FieldArgs) -> CliResult<Output> {
    let mut text = format!(
        "F_{} = F_{}^{}  modulus {}  primitive element {}\n",
        f.q(),
        f.p(),
        f.r(),
        poly_text(f.modulus()),
        f.primitive_element()
    );
    let mut j = json!({
        "p": f.p(), "r": f.r(), "q": f.q(),
        "mod": f.modulus(), "primitive": f.primitive_element(),
    });
    if a.pretty {
        if f.q() > 16 {
            return Err("--pretty is limited to fields with at most 16 elements".into());
        }
        let names: Vec<Value> = f
            .elements()
            .map(|e| json!({"code": e, "name": f.pretty(e)}))
            .collect();
        for e in f.elements() {
            text.push_str(&format!("  {e:>2} = {}\n", f.pretty(e)));
        }
        j["elements"] = Value::Array(names);
    }
    if let (Some(op), Some(x), Some(y)) = (&a.op, a.a, a.b) {
        let x = f.check(x)?;
        let r = if op == "pow" {
            f.pow(x, y)
        } else {
            let y = f.check(y)?;
            let op = match op.as_str() {
                "add" => FieldOp::Add,
                "sub" => FieldOp::Sub,
                "mul" => FieldOp::Mul,
                "div" => FieldOp::Div,
                other => return Err(format!("unknown operation '{other}'").into()),
            };
            f.arith(x, y, op)?
        };
        text.push_str(&format!("{op}({x}, {y}) = {r}\n"));
        j["result"] = json!(r);
    }
    Ok(Output::new(text, j))
}

// ---------------------------------------------------------------- skew

fn skew_poly(f: &FieldSpec, theta: &FieldAutomorphism, s: &str) -> CliResult<SkewPoly> {
    Ok(SkewPoly::new(theta, format::parse_poly(f, s)?))
}

fn context(f: &FieldSpec, m: &Modulus) -> CliResult<TwistContext> {
    let theta = FieldAutomorphism::new(f, m.twist.theta);
    Ok(TwistContext::new(m.n, f.check(m.twist.lambda)?, &theta)?)
}

fn skew_cmd(f: &FieldSpec, c: &SkewCmd) -> CliResult<Output> {
    match c {
        SkewCmd::Factor { poly, theta, cap } => {
            let theta = FieldAutomorphism::new(f, *theta);
            let p = skew_poly(f, &theta, poly)?;
            let mut text = String::new();
            let mut rows = Vec::new();
            for g in skewcode::monic_right_divisors(&p, None, *cap)? {
                let (h, r) = p.right_divmod(&g)?;
                debug_assert!(r.is_zero());
                text.push_str(&format!("({h}) * ({g})\n"));
                rows.push(json!({"left": h.coeffs(), "right": g.coeffs()}));
            }
            Ok(Output::new(text, json!({ "factorizations": rows })))
        }
        SkewCmd::Divmod { poly, by, theta } => {
            let theta = FieldAutomorphism::new(f, *theta);
            let p = skew_poly(f, &theta, poly)?;
            let g = skew_poly(f, &theta, by)?;
            let (q, r) = p.right_divmod(&g)?;
            Ok(Output::new(
                format!("quotient  {q}\nremainder {r}\n"),
                json!({"quotient": q.coeffs(), "remainder": r.coeffs()}),
            ))
        }
        SkewCmd::Divisors { modulus, degree, cap } => {
            let ctx = context(f, modulus)?;
            let divs = ctx.right_divisors(*degree, *cap)?;
            let text: String = divs.iter().map(|g| format!("{g}\n")).collect();
            let j: Vec<&[Elem]> = divs.iter().map(|g| g.coeffs()).collect();
            Ok(Output::new(text, json!({ "divisors": j })))
        }
        SkewCmd::Dualgen { modulus, g } => {
            let ctx = context(f, modulus)?;
            let g = skew_poly(f, ctx.theta(), g)?;
            let d = ctx.dual_generator(&g)?;
            let dual = ctx.dual();
            Ok(Output::new(
                format!(
                    "dual generator {d}\ndual modulus x^{} - {}\n",
                    dual.n(),
                    dual.lambda()
                ),
                json!({"generator": d.coeffs(), "n": dual.n(), "lambda": dual.lambda()}),
            ))
        }
        SkewCmd::Contain { modulus, g } => {
            let ctx = context(f, modulus)?;
            let g = skew_poly(f, ctx.theta(), g)?;
            let verdict = ctx.containment_check(&g)?;
            Ok(Output::new(
                format!("{verdict}\n"),
                json!({ "containment": verdict.to_string() }),
            ))
        }
    }
}

// ---------------------------------------------------------------- code

fn load_code(cli: &Cli, input: &CodeInput) -> CliResult<LinearCode> {
    match (&input.input, &input.matrix) {
        (Some(p), _) => Ok(format::read_code(&read(p)?)?),
        (None, Some(p)) => {
            let f = format::parse_field_flag(&cli.field)?;
            let rows = format::parse_matrix_text(&f, &read(p)?)?;
            let n = rows.first().map_or(0, |r| r.len());
            Ok(LinearCode::new(&f, n, rows)?)
        }
        (None, None) => Err("pass --in FILE or --matrix FILE".into()),
    }
}

fn emit_code(code: &LinearCode, out: &Option<std::path::PathBuf>) -> CliResult<Output> {
    let body = format::write_code(code);
    if let Some(p) = out {
        write(p, &body)?;
    }
    let j: Value = serde_json::from_str(&body)?;
    Ok(Output::new(body, j))
}

fn code_cmd(cli: &Cli, c: &CodeCmd) -> CliResult<Output> {
    match c {
        CodeCmd::Mindist { input } => {
            let code = load_code(cli, input)?;
            let d = min_distance(&code, cli.budget)?;
            Ok(Output::new(
                format!("[{},{},{}]\n", code.n(), code.k(), d),
                json!({"n": code.n(), "k": code.k(), "d": d}),
            ))
        }
        CodeCmd::Dual { input, out } => emit_code(&load_code(cli, input)?.dual(), out),
        CodeCmd::Canon { input, out } => emit_code(&load_code(cli, input)?, out),
        CodeCmd::Check { input, twist, ell } => {
            let code = load_code(cli, input)?;
            let f = code.field().clone();
            let lambda = f.check(twist.lambda)?;
            let theta = FieldAutomorphism::new(&f, twist.theta);
            let shift = ShiftMap::new(&theta, lambda)?;
            let closed = code.is_closed_under(&shift)?;
            let mut text = format!("skew constacyclic: {}\n", yes_no(closed));
            let mut j = json!({ "closed": closed });
            if closed && !code.is_zero() {
                let ctx = TwistContext::new(code.n(), lambda, &theta)?;
                let g = generator_skew_polynomial(&code, &ctx)?;
                text.push_str(&format!("generator {g}\n"));
                j["generator"] = json!(g.coeffs());
            }
            if let Some(ell) = ell {
                let qt = code.is_quasi_twisted(lambda, *ell)?;
                text.push_str(&format!("quasi-twisted of index {ell}: {}\n", yes_no(qt)));
                j["quasi_twisted"] = json!(qt);
            }
            Ok(Output::new(text, j))
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

// ---------------------------------------------------------------- ring

fn ring_cmd(f: &FieldSpec, c: &RingCmd) -> CliResult<Output> {
    match c {
        RingCmd::Aut { t } => {
            let ring = RingSpec::new(f, *t)?;
            let auts = RingAutomorphism::enumerate(&ring, DEFAULT_AUT_CAP)?;
            let mut body = Vec::new();
            let mut j = Vec::new();
            for a in &auts {
                let group = match (a.in_g1(), a.in_g2()) {
                    (true, true) => "G1,G2",
                    (true, false) => "G1",
                    (false, true) => "G2",
                    (false, false) => "-",
                };
                body.push([a.to_string(), a.order().to_string(), group.to_string()]);
                let perm: Vec<usize> = a.perm().iter().map(|p| p + 1).collect();
                j.push(json!({"perm": perm, "exps": a.exps(), "order": a.order(), "g1": a.in_g1(), "g2": a.in_g2()}));
            }
            let mut text = format!("{} automorphisms of F_{}^{}\n", auts.len(), f.q(), t);
            table(&mut text, &["automorphism", "order", "group"], &body);
            Ok(Output::new(text, json!({ "automorphisms": j })))
        }
        RingCmd::Ideals { t } => {
            let ring = RingSpec::new(f, *t)?;
            let ideals = list_ideals(&ring)?;
            let mut body = Vec::new();
            let mut j = Vec::new();
            for i in &ideals {
                let support: Vec<usize> = i.support.iter().map(|s| s + 1).collect();
                body.push([
                    int_list(&support),
                    int_list(&i.generator()),
                    yes_no(i.is_maximal()).to_string(),
                ]);
                j.push(json!({"support": support, "generator": i.generator(), "maximal": i.is_maximal()}));
            }
            let mut text = String::new();
            table(&mut text, &["support", "idempotent", "maximal"], &body);
            Ok(Output::new(text, json!({ "ideals": j })))
        }
    }
}

// ---------------------------------------------------------------- ringcode

fn ring_twist(ring: &RingSpec, a: &RingTwistArgs) -> CliResult<RingTwist> {
    let theta = format::parse_automorphism(ring, &a.theta)?;
    let lambda = match &a.lambda {
        Some(s) => format::parse_ring_element(ring, s)?,
        None => ring.one(),
    };
    Ok(RingTwist::new(&theta, lambda)?)
}

fn emit_ring_code(code: &RingLinearCode, out: &Option<std::path::PathBuf>) -> CliResult<Output> {
    let body = format::write_ring_code(code);
    if let Some(p) = out {
        write(p, &body)?;
    }
    let j: Value = serde_json::from_str(&body)?;
    Ok(Output::new(body, j))
}

fn ringcode_cmd(cli: &Cli, c: &RingcodeCmd) -> CliResult<Output> {
    match c {
        RingcodeCmd::Check { input, twist } => {
            let code = format::read_ring_code(&read(input)?)?;
            let tw = ring_twist(code.ring(), twist)?;
            let characterized = is_ring_skew_constacyclic(&code, &tw)?;
            let direct = is_sigma_closed(&code, &tw)?;
            if characterized != direct {
                return Err("component characterization disagrees with direct closure".into());
            }
            let mut text = format!("skew constacyclic: {}\n", yes_no(direct));
            let mut j = json!({ "closed": direct });
            if direct && tw.theta().in_g1() && !code.is_zero() {
                let g = ring_generator_polynomial(&code, &tw)?;
                text.push_str(&format!("generator {}\n", g.combined));
                text.push_str(&format!("log_q |C| = {}\n", g.log_size(code.n())));
                let comps: Vec<&[Elem]> = g.components.iter().map(|p| p.coeffs()).collect();
                j["components"] = json!(comps);
                j["generator"] = json!(g.combined.coeffs());
            }
            Ok(Output::new(text, j))
        }
        RingcodeCmd::Build { c1, t, theta, out } => {
            let c1 = format::read_code(&read(c1)?)?;
            let ring = RingSpec::new(c1.field(), *t)?;
            let theta = format::parse_automorphism(&ring, theta)?;
            emit_ring_code(&build_case_two(&c1, &theta)?, out)
        }
        RingcodeCmd::Count { t, n, theta } => {
            let f = format::parse_field_flag(&cli.field)?;
            let ring = RingSpec::new(&f, *t)?;
            let theta = format::parse_automorphism(&ring, theta)?;
            let count = count_theta_cyclic_coprime(&theta, *n)?;
            Ok(Output::new(format!("{count}\n"), json!({ "count": count.to_string() })))
        }
    }
}

// ---------------------------------------------------------------- maps

fn map_image(cli: &Cli, io: &MapOutput, build: impl Fn(&RingLinearCode) -> CliResult<LinearCode>) -> CliResult<Output> {
    let code = format::read_ring_code(&read(&io.input)?)?;
    let image = build(&code)?;
    let mut out = emit_code(&image, &io.out)?;
    if io.distance {
        let d = if image.is_zero() {
            None
        } else {
            Some(min_distance(&image, cli.budget)?)
        };
        let params = match d {
            Some(d) => format!("[{},{},{}]", image.n(), image.k(), d),
            None => format!("[{},{},-]", image.n(), image.k()),
        };
        out.text = format!("{params}\n");
        out.json = json!({"n": image.n(), "k": image.k(), "d": d});
    }
    Ok(out)
}

fn maps_cmd(cli: &Cli, c: &MapsCmd) -> CliResult<Output> {
    match c {
        MapsCmd::Phi { io } => map_image(cli, io, |c| Ok(maps::phi(c))),
        MapsCmd::Psi { io } => map_image(cli, io, |c| Ok(maps::psi(c))),
        MapsCmd::Eta { m, io } => map_image(cli, io, |c| {
            let m = MapMatrix::new(c.ring().field(), format::parse_matrix(c.ring().field(), m)?)?;
            Ok(maps::eta(&m, c)?)
        }),
        MapsCmd::Vandermonde { roots, scalars } => {
            let f = format::parse_field_flag(&cli.field)?;
            let roots = format::parse_elements(&f, roots)?;
            let scalars = format::parse_elements(&f, scalars)?;
            let m = maps::vandermonde_map(&f, &scalars, &roots)?;
            let scale = m.orthogonality_scale();
            let mut text = format!("{m}\n");
            if let Some(k) = scale {
                text.push_str(&format!("M M^T = {k} E\n"));
            }
            Ok(Output::new(text, json!({"matrix": m.rows(), "orthogonality_scale": scale})))
        }
    }
}

// ---------------------------------------------------------------- verify / search

fn verify_cmd(cli: &Cli, a: &VerifyArgs) -> CliResult<Output> {
    let report = verify_paper(cli.budget);
    let body = report.to_json();
    if let Some(p) = &a.json {
        write(p, &body)?;
    }
    Ok(Output {
        text: report.to_text(),
        json: serde_json::from_str(&body)?,
        ok: report.all_pass(),
    })
}

fn search_cmd(cli: &Cli, f: &FieldSpec, a: &SearchArgs) -> CliResult<Output> {
    let limits = SearchLimits {
        budget: cli.budget,
        divisor_cap: a.cap,
        ..SearchLimits::default()
    };
    let table = if a.ring {
        let t = a.t.ok_or("--ring needs --t")?;
        let ring = RingSpec::new(f, t)?;
        let theta = a.ring_theta.as_deref().ok_or("--ring needs --ring-theta")?;
        let tw = ring_twist(
            &ring,
            &RingTwistArgs {
                theta: theta.to_string(),
                lambda: a.ring_lambda.clone(),
            },
        )?;
        search_ring(&tw, a.modulus.n, &limits)?
    } else {
        search_field(&context(f, &a.modulus)?, &limits)?
    };
    let body = table.to_json();
    if let Some(p) = &a.json {
        write(p, &body)?;
    }
    Ok(Output::new(table.to_text(), serde_json::from_str(&body)?))
}

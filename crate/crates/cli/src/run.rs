//! Execution of parsed commands.

use std::fs;
use std::path::Path;

use tropos::analysis::{integrate, legendre_transform, measure_integrate, uniform_grid, GridFunction};
use tropos::dequant::{add_h, deformation_residual, DeformationParam};
use tropos::interval::{endpoints, interval_bellman_solve, Interval};
use tropos::linalg::{closure, cycle_mean_eigenvalue, default_max_iter, eigenpair, solve_gauss_seidel, solve_jacobi, Matrix};
use tropos::semiring::{
    format_real, Boolean, ExtReal, Idempotent, MaxMin, MaxPlus, MinPlus, NonNegPlusTimes, Semiring, SemiringId, Tropical, UnitMaxMin,
};
use tropos::tropical::{amoeba_sample_with, convergence_experiment, corner_locus_sample, BoxRegion, ConvergenceConfig};

use crate::cli::{
    AmoebaArgs, ClosureArgs, Cli, Command, ConvergeArgs, DeformArgs, GraphArgs, IntegrateArgs, IntervalSolveArgs,
    LegendreArgs, Method, SolveArgs, TropicalArgs,
};
use crate::error::{detail, CliError, CliResult};
use crate::formats::{parse_complex_poly, parse_grid, parse_range, parse_tropical_poly, Cell, Output};
use crate::graph::{parse_graph, GraphSpec};

/// Rendered output plus warnings for stderr.
#[derive(Debug)]
pub struct Report {
    pub text: String,
    pub warnings: Vec<String>,
}

/// Runs `body` with `$S` bound to the semiring named by `$id`.
macro_rules! with_semiring {
    ($id:expr, $S:ident => $body:expr) => {
        match $id {
            SemiringId::MaxPlus => {
                type $S = MaxPlus;
                $body
            }
            SemiringId::MinPlus => {
                type $S = MinPlus;
                $body
            }
            SemiringId::MaxMin => {
                type $S = MaxMin;
                $body
            }
            SemiringId::Boolean => {
                type $S = Boolean;
                $body
            }
            SemiringId::UnitMaxMin => {
                type $S = UnitMaxMin;
                $body
            }
            SemiringId::NonNegPlusTimes => {
                type $S = NonNegPlusTimes;
                $body
            }
            SemiringId::IntervalOf(inner) => with_idempotent!(inner.as_ref(), Inner => {
                type $S = Interval<Inner>;
                $body
            }),
        }
    };
}

/// Like `with_semiring!` but only over idempotent, non-interval instances.
macro_rules! with_idempotent {
    ($id:expr, $S:ident => $body:expr) => {
        match $id {
            SemiringId::MaxPlus => {
                type $S = MaxPlus;
                $body
            }
            SemiringId::MinPlus => {
                type $S = MinPlus;
                $body
            }
            SemiringId::MaxMin => {
                type $S = MaxMin;
                $body
            }
            SemiringId::Boolean => {
                type $S = Boolean;
                $body
            }
            SemiringId::UnitMaxMin => {
                type $S = UnitMaxMin;
                $body
            }
            other => Err(CliError::Capability(format!(
                "interval extension needs a non-interval idempotent semiring, `{other}` is not one"
            ))),
        }
    };
}

pub fn execute(cli: &Cli) -> CliResult<Report> {
    let mut warnings = Vec::new();
    let output = match &cli.command {
        Command::Solve(args) => {
            let g = load_graph(&args.graph, &mut warnings)?;
            with_semiring!(&g.semiring, S => solve::<S>(&g, args))?
        }
        Command::Closure(args) => {
            let g = load_graph(&args.graph, &mut warnings)?;
            with_semiring!(&g.semiring, S => closure_table::<S>(&g, args))?
        }
        Command::Eigen(args) => {
            let g = load_graph(args, &mut warnings)?;
            match &g.semiring {
                SemiringId::MaxPlus => eigen::<MaxPlus>(&g, &mut warnings)?,
                SemiringId::MinPlus => eigen::<MinPlus>(&g, &mut warnings)?,
                other => {
                    return Err(CliError::Capability(format!(
                        "cycle-mean eigenvalues need maxplus or minplus, not `{other}`"
                    )))
                }
            }
        }
        Command::Integrate(args) => {
            let id: SemiringId = args.semiring.parse()?;
            with_semiring!(&id, S => integrate_cmd::<S>(args))?
        }
        Command::Legendre(args) => legendre(args)?,
        Command::Deform(args) => deform(args)?,
        Command::IntervalSolve(args) => {
            let g = load_graph(&args.graph, &mut warnings)?;
            match &g.semiring {
                SemiringId::IntervalOf(inner) => with_idempotent!(inner.as_ref(), S => interval_solve::<S>(&g, args))?,
                other => {
                    return Err(CliError::Capability(format!(
                        "interval-solve needs interval weights, graph is over `{other}`"
                    )))
                }
            }
        }
        Command::Tropical(args) => tropical(args)?,
        Command::Amoeba(args) => amoeba(args, &mut warnings)?,
        Command::Converge(args) => converge(args)?,
    };
    Ok(Report {
        text: output.render(cli.format),
        warnings,
    })
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::Other(format!("cannot read {}: {e}", path.display())))
}

fn load_graph(args: &GraphArgs, warnings: &mut Vec<String>) -> CliResult<GraphSpec> {
    // reject a bad override before touching the file
    let override_id: Option<SemiringId> = args.semiring.as_deref().map(str::parse).transpose()?;
    let mut g = parse_graph(&read(&args.graph)?)?;
    if let Some(id) = override_id {
        g.semiring = id;
    }
    warnings.append(&mut g.warnings);
    Ok(g)
}

fn value<S: Semiring>(x: &S::Elem) -> Cell {
    Cell::Value(S::format_elem(x))
}

fn num(x: f64) -> Cell {
    Cell::Value(format_real(x))
}

fn label(s: &str) -> Cell {
    Cell::Label(s.to_string())
}

fn meta(pairs: &[(&str, String)]) -> Vec<(String, String)> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn positive(name: &str, x: f64) -> CliResult<f64> {
    if x > 0.0 && x.is_finite() {
        Ok(x)
    } else {
        Err(CliError::Parse(format!("--{name} must be positive, got {x}")))
    }
}

fn column_table<S: Semiring>(g: &GraphSpec, x: &Matrix<S>) -> Vec<Vec<Cell>> {
    g.nodes
        .iter()
        .enumerate()
        .map(|(i, n)| vec![label(n), value::<S>(&x.get(i, 0))])
        .collect()
}

fn solve<S: Semiring>(g: &GraphSpec, args: &SolveArgs) -> CliResult<Output> {
    let a = g.adjacency::<S>()?;
    let n = g.nodes.len();
    let source = g.node_index(&args.source)?;
    let h = a.transpose();
    let f = Matrix::<S>::unit_column(n, source);
    let max_iter = args.max_iter.unwrap_or_else(|| default_max_iter(n));
    let run = |m: Method| match m {
        Method::Jacobi => solve_jacobi(&h, &f, max_iter),
        Method::GaussSeidel => solve_gauss_seidel(&h, &f, max_iter),
    };
    let report = run(args.method)?;
    if args.verify {
        let other = run(match args.method {
            Method::Jacobi => Method::GaussSeidel,
            Method::GaussSeidel => Method::Jacobi,
        })?;
        // the closure row sums each path from the far end, a third evaluation order
        let row = closure(&a, max_iter)?.result.row(source).to_vec();
        for (i, node) in g.nodes.iter().enumerate() {
            let (x, y, z) = (report.result.get(i, 0), other.result.get(i, 0), row[i]);
            if x != y || x != z {
                return Err(CliError::Verify(format!(
                    "node {node}: jacobi/gauss-seidel/closure give {}, {}, {}",
                    S::format_elem(if args.method == Method::Jacobi { &x } else { &y }),
                    S::format_elem(if args.method == Method::Jacobi { &y } else { &x }),
                    S::format_elem(&z)
                )));
            }
        }
    }
    let method = match args.method {
        Method::Jacobi => "jacobi",
        Method::GaussSeidel => "gauss-seidel",
    };
    Ok(Output::Table {
        command: "solve",
        meta: meta(&[
            ("semiring", S::id().to_string()),
            ("method", method.into()),
            ("source", args.source.clone()),
            ("iterations", report.iterations.to_string()),
        ]),
        columns: vec!["node".into(), "value".into()],
        rows: column_table::<S>(g, &report.result),
    })
}

fn closure_table<S: Semiring>(g: &GraphSpec, args: &ClosureArgs) -> CliResult<Output> {
    let a = g.adjacency::<S>()?;
    let n = g.nodes.len();
    let report = closure(&a, args.max_iter.unwrap_or_else(|| default_max_iter(n)))?;
    let mut columns = vec!["from".to_string()];
    columns.extend(g.nodes.iter().cloned());
    let rows = (0..n)
        .map(|i| {
            let mut row = vec![label(&g.nodes[i])];
            row.extend(report.result.row(i).iter().map(value::<S>));
            row
        })
        .collect();
    Ok(Output::Table {
        command: "closure",
        meta: meta(&[
            ("semiring", S::id().to_string()),
            ("iterations", report.iterations.to_string()),
        ]),
        columns,
        rows,
    })
}

fn eigen<S: Tropical>(g: &GraphSpec, warnings: &mut Vec<String>) -> CliResult<Output> {
    let a = g.adjacency::<S>()?;
    let lambda = cycle_mean_eigenvalue(&a)?;
    let rows = match eigenpair(&a) {
        Ok(pair) => column_table::<S>(g, &pair.vector),
        Err(e) if e.is_divergence() => {
            warnings.push(format!("no eigenvector: the normalised closure did not stabilise ({e})"));
            Vec::new()
        }
        Err(e) => return Err(e.into()),
    };
    Ok(Output::Table {
        command: "eigen",
        meta: meta(&[("semiring", S::id().to_string()), ("eigenvalue", format_real(lambda))]),
        columns: vec!["node".into(), "eigenvector".into()],
        rows,
    })
}

fn grid_function<S: Semiring>(path: &Path) -> CliResult<GridFunction<S, String>> {
    let (points, literals) = parse_grid(&read(path)?)?;
    let values = literals
        .iter()
        .map(|v| S::parse_elem(v))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(GridFunction::new(points, values)?)
}

fn integrate_cmd<S: Semiring>(args: &IntegrateArgs) -> CliResult<Output> {
    let f = grid_function::<S>(&args.input)?;
    let (kind, result) = match &args.density {
        None => ("plain", integrate(&f)?),
        Some(path) => ("measure", measure_integrate(&f, &grid_function::<S>(path)?)?),
    };
    Ok(Output::Table {
        command: "integrate",
        meta: meta(&[("semiring", S::id().to_string()), ("integral", kind.into())]),
        columns: vec!["points".into(), "integral".into()],
        rows: vec![vec![Cell::Value(f.len().to_string()), value::<S>(&result)]],
    })
}

fn legendre(args: &LegendreArgs) -> CliResult<Output> {
    let (points, literals) = parse_grid(&read(&args.input)?)?;
    let xs = points
        .iter()
        .map(|p| p.parse::<f64>().map_err(|_| CliError::Parse(format!("grid point `{p}` is not a number"))))
        .collect::<CliResult<Vec<_>>>()?;
    let values = literals
        .iter()
        .map(|v| MaxPlus::parse_elem(v))
        .collect::<Result<Vec<_>, _>>()?;
    let f = GridFunction::<MaxPlus, f64>::new(xs, values)?;
    let (lo, hi, step) = parse_range(&args.slopes)?;
    positive("slopes step", step)?;
    let slopes = uniform_grid(lo, hi, step).map_err(|e| CliError::Parse(detail(&e)))?;
    let lf = legendre_transform(&f, &slopes)?;
    Ok(Output::Table {
        command: "legendre",
        meta: meta(&[("slopes", args.slopes.clone())]),
        columns: vec!["slope".into(), "value".into()],
        rows: lf.iter().map(|(&p, v)| vec![num(p), value::<MaxPlus>(v)]).collect(),
    })
}

fn deform(args: &DeformArgs) -> CliResult<Output> {
    if !(args.u.is_finite() && args.v.is_finite()) {
        return Err(CliError::Parse("--u and --v must be finite".into()));
    }
    let rows = args
        .h
        .iter()
        .map(|&h| {
            let p = DeformationParam::new(h).map_err(|_| CliError::Parse(format!("--h values must be finite and nonzero, got {h}")))?;
            let sum = add_h(ExtReal::new(args.u), ExtReal::new(args.v), p);
            Ok(vec![num(h), value::<MaxPlus>(&sum), num(deformation_residual(args.u, args.v, p)?)])
        })
        .collect::<CliResult<_>>()?;
    Ok(Output::Table {
        command: "deform",
        meta: meta(&[("u", num_str(args.u)), ("v", num_str(args.v))]),
        columns: vec!["h".into(), "sum".into(), "residual".into()],
        rows,
    })
}

fn num_str(x: f64) -> String {
    format_real(x)
}

fn interval_solve<S: Idempotent>(g: &GraphSpec, args: &IntervalSolveArgs) -> CliResult<Output> {
    let a = g.adjacency::<Interval<S>>()?;
    let n = g.nodes.len();
    let source = g.node_index(&args.source)?;
    let f = Matrix::<Interval<S>>::unit_column(n, source);
    let report = interval_bellman_solve(&a.transpose(), &f, args.max_iter.unwrap_or_else(|| default_max_iter(n)))
        .map_err(|e| match e.source {
            tropos::linalg::SolveError::Algebra(inner) => CliError::from(inner),
            _ => CliError::Divergence(e.to_string()),
        })?;
    let (lower, upper) = endpoints(&report.solution);
    Ok(Output::Table {
        command: "interval-solve",
        meta: meta(&[
            ("semiring", Interval::<S>::id().to_string()),
            ("source", args.source.clone()),
            ("scalar solves", report.scalar_solves.to_string()),
        ]),
        columns: vec!["node".into(), "lower".into(), "upper".into()],
        rows: g
            .nodes
            .iter()
            .enumerate()
            .map(|(i, node)| vec![label(node), value::<S>(&lower.get(i, 0)), value::<S>(&upper.get(i, 0))])
            .collect(),
    })
}

fn broadcast(name: &str, v: &[f64], dim: usize) -> CliResult<Vec<f64>> {
    match v.len() {
        1 => Ok(vec![v[0]; dim]),
        n if n == dim => Ok(v.to_vec()),
        n => Err(CliError::Parse(format!("--{name} has {n} values for a {dim}-variable polynomial"))),
    }
}

fn tropical(args: &TropicalArgs) -> CliResult<Output> {
    let p = parse_tropical_poly(&read(&args.poly)?)?;
    let step = positive("step", args.step)?;
    let eps = positive("eps", args.eps.unwrap_or(step / 2.0))?;
    let region = BoxRegion::new(broadcast("lo", &args.lo, p.dim())?, broadcast("hi", &args.hi, p.dim())?)
        .map_err(|e| CliError::Parse(detail(&e)))?;
    let cloud = corner_locus_sample(&p, &region, step, eps)?;
    Ok(Output::Cloud {
        meta: meta(&[
            ("tag", cloud.tag.clone()),
            ("step", num_str(step)),
            ("eps", num_str(eps)),
            ("points", cloud.len().to_string()),
        ]),
        cloud,
    })
}

fn amoeba(args: &AmoebaArgs, warnings: &mut Vec<String>) -> CliResult<Output> {
    let f = parse_complex_poly(&read(&args.poly)?)?;
    let h = positive("h", args.h)?;
    let radius = positive("log-radius", args.log_radius)?;
    if args.samples == 0 {
        return Err(CliError::Parse("--samples must be positive".into()));
    }
    let sample = amoeba_sample_with(&f, h, args.samples, args.seed, radius)?;
    if sample.skipped > 0 {
        warnings.push(format!("{} degenerate samples skipped", sample.skipped));
    }
    Ok(Output::Cloud {
        meta: meta(&[
            ("tag", sample.cloud.tag.clone()),
            ("seed", args.seed.to_string()),
            ("samples", args.samples.to_string()),
            ("skipped", sample.skipped.to_string()),
        ]),
        cloud: sample.cloud,
    })
}

fn converge(args: &ConvergeArgs) -> CliResult<Output> {
    let f = parse_complex_poly(&read(&args.poly)?)?;
    if !f.has_unit_coefficients() {
        return Err(CliError::Capability(
            "convergence is only defined for curves with unit-modulus coefficients".into(),
        ));
    }
    let p = match &args.tropical {
        Some(path) => parse_tropical_poly(&read(path)?)?,
        None => f.tropicalize()?,
    };
    for &h in &args.h {
        positive("h", h)?;
    }
    if args.samples == 0 {
        return Err(CliError::Parse("--samples must be positive".into()));
    }
    let mut config = ConvergenceConfig::new(args.h.clone(), args.samples, args.seed);
    config.grid_step = positive("grid-step", args.grid_step)?;
    config.log_radius = positive("log-radius", args.log_radius)?;
    let rows = convergence_experiment(&f, &p, &config)?;
    Ok(Output::Table {
        command: "converge",
        meta: meta(&[
            ("seed", args.seed.to_string()),
            ("samples", args.samples.to_string()),
            ("grid step", num_str(config.grid_step)),
        ]),
        columns: vec!["h".into(), "distance".into(), "amoeba_points".into(), "skeleton_points".into()],
        rows: rows
            .iter()
            .map(|r| {
                vec![
                    num(r.h),
                    num(r.distance),
                    Cell::Value(r.amoeba_points.to_string()),
                    Cell::Value(r.skeleton_points.to_string()),
                ]
            })
            .collect(),
    })
}

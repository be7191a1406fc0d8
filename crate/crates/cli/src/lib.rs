//! `pyramid` command-line front end.
//!
//! `--n` is always the base-cube dimension; the ambient space is `n + 1`.
//! Exit codes: 0 when every requested check passes, 1 when a check fails or
//! an output cannot be written, 2 for invalid arguments.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::One;
use pyramid_core::decomposition::{
    chain_volume, cube_chain, pyramid_chain, rotate_chain, SimplexChain,
};
use pyramid_core::render::{
    animate, build_scene, render_frame, FrameSpec, OutputFormat, ProjectionKind,
};
use pyramid_core::symmetry::theta;
use pyramid_core::verification::{
    mc_estimate, mc_volume, verify_cuboid_tiling, verify_tessellation,
};
use pyramid_core::Rational;

pub const MAX_EXACT_N: usize = 8;
pub const MAX_LP_N: usize = 6;
pub const MAX_DECOMPOSE_N: usize = 7;

#[derive(Debug, Parser)]
#[command(
    name = "pyramid",
    version,
    about = "Exact checks and renders of the pyramid that fills 1/(n+1) of the (n+1)-cube"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run a tessellation or tiling check.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Print the volume of the pyramid or the cube.
    Volume(VolumeArgs),
    /// Write the simplex decomposition of the (n+1)-cube as JSON.
    Decompose(DecomposeArgs),
    /// Render one projected frame.
    Render(RenderArgs),
    /// Render a full rotation sweep into numbered frames.
    Animate(AnimateArgs),
}

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// Rotated pyramids tessellate the (n+1)-cube.
    Tessellation(SampleArgs),
    /// The cuboids D_n[i] tile the simplex S_n.
    Cuboids(SampleArgs),
}

#[derive(Debug, Args)]
pub struct SampleArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 100_000)]
    pub samples: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Write the machine-readable report here.
    #[arg(long)]
    pub json: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Figure {
    Pyramid,
    Cube,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Exact,
    Mc,
}

#[derive(Debug, Args)]
pub struct VolumeArgs {
    #[arg(long, value_enum)]
    pub figure: Figure,
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum)]
    pub method: Method,
    #[arg(long, default_value_t = 100_000)]
    pub samples: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Args)]
pub struct DecomposeArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub out: PathBuf,
    /// `cube` gives (n+1)! simplices; `pyramid` gives the n! simplices of Py_{n+1}.
    #[arg(long, value_enum, default_value_t = Figure::Cube)]
    pub figure: Figure,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Projection {
    Roots2d,
    Octahedral,
    Roots3d,
    #[value(name = "axes3d-squash")]
    Axes3dSquash,
    #[value(name = "axes3d-favorite")]
    Axes3dFavorite,
}

impl From<Projection> for ProjectionKind {
    fn from(p: Projection) -> Self {
        match p {
            Projection::Roots2d => ProjectionKind::Roots2d,
            Projection::Octahedral => ProjectionKind::Octahedral,
            Projection::Roots3d => ProjectionKind::Roots3d,
            Projection::Axes3dSquash => ProjectionKind::Axes3dSquash,
            Projection::Axes3dFavorite => ProjectionKind::Axes3dFavorite,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Svg,
    Obj,
}

impl From<Format> for OutputFormat {
    fn from(f: Format) -> Self {
        match f {
            Format::Svg => OutputFormat::Svg,
            Format::Obj => OutputFormat::Obj,
        }
    }
}

#[derive(Debug, Args)]
pub struct RenderArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum)]
    pub projection: Projection,
    #[arg(long, default_value_t = 0.0)]
    pub t: f64,
    #[arg(long, value_enum, default_value_t = Format::Svg)]
    pub format: Format,
    #[arg(long)]
    pub out: PathBuf,
    #[arg(long, default_value_t = 640)]
    pub size: u32,
}

#[derive(Debug, Args)]
pub struct AnimateArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum)]
    pub projection: Projection,
    #[arg(long)]
    pub frames: usize,
    #[arg(long)]
    pub outdir: PathBuf,
    /// Defaults to svg for planar projections and obj for 3-D ones.
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

enum Failure {
    Usage(String),
    Runtime(String),
    Check,
}

impl From<pyramid_core::Error> for Failure {
    fn from(e: pyramid_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

/// Parses `args` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return e.exit_code();
        }
    };
    match dispatch(cli.command) {
        Ok(()) => 0,
        Err(Failure::Check) => 1,
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            eprintln!("run `pyramid --help` for usage");
            2
        }
    }
}

fn dispatch(command: Command) -> Outcome {
    match command {
        Command::Verify(VerifyCommand::Tessellation(a)) => verify_tessellation_cmd(a),
        Command::Verify(VerifyCommand::Cuboids(a)) => verify_cuboids_cmd(a),
        Command::Volume(a) => volume_cmd(a),
        Command::Decompose(a) => decompose_cmd(a),
        Command::Render(a) => render_cmd(a),
        Command::Animate(a) => animate_cmd(a),
    }
}

fn limit(name: &str, n: usize, max: usize) -> Outcome {
    if n > max {
        Err(Failure::Usage(format!(
            "{name} supports n <= {max}, got {n}"
        )))
    } else {
        Ok(())
    }
}

fn write_file(path: &Path, bytes: &[u8]) -> Outcome {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        fs::create_dir_all(dir).map_err(|e| Failure::Runtime(format!("{}: {e}", dir.display())))?;
    }
    fs::write(path, bytes).map_err(|e| Failure::Runtime(format!("{}: {e}", path.display())))
}

fn write_json<T: serde::Serialize>(path: &Path, value: &T) -> Outcome {
    let mut text =
        serde_json::to_string_pretty(value).map_err(|e| Failure::Runtime(e.to_string()))?;
    text.push('\n');
    write_file(path, text.as_bytes())
}

fn verify_tessellation_cmd(a: SampleArgs) -> Outcome {
    limit("verify tessellation", a.n, MAX_EXACT_N)?;
    let r = verify_tessellation(a.n, a.samples, a.seed);
    println!(
        "tessellation of the {}-cube by {} rotated pyramids",
        r.dim, r.dim
    );
    println!("  exact volume each: {}", r.exact_volume_each);
    println!("  volume sum:        {}", r.volume_sum);
    println!("  pyramid = region:  {}", r.pyramid_equals_region);
    println!("  orbit match:       {:?}", r.orbit_match);
    println!(
        "  samples: {} (ties {}), uncovered {}, multiply covered {}, assignment mismatches {}",
        r.sample_count,
        r.tie_samples,
        r.cover_violations,
        r.multi_assignment_count,
        r.assign_mismatches
    );
    println!(
        "  hits per region: {:?} (expected {:.1} +/- {:.1})",
        r.per_region_hits, r.expected_hits, r.hit_tolerance
    );
    if let Some(path) = &a.json {
        write_json(path, &r)?;
    }
    let ok = r.passed();
    println!("{}", if ok { "PASS" } else { "FAIL" });
    if ok {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn verify_cuboids_cmd(a: SampleArgs) -> Outcome {
    limit("verify cuboids", a.n, MAX_LP_N)?;
    let r = verify_cuboid_tiling(a.n, a.samples, a.seed);
    println!("tiling of S_{} by the cuboids D_{}[i]", a.n, a.n);
    println!("  centroid in every cuboid: {}", r.centroid_in_all_cuboids);
    println!("  D[n+1] inside Py^(n+1):   {}", r.top_cuboid_in_pyramid);
    println!(
        "  vertex counts: {:?} (expected {})",
        r.vertex_counts, r.expected_vertex_count
    );
    println!(
        "  edge counts:   {:?} (expected {})",
        r.edge_counts, r.expected_edge_count
    );
    println!(
        "  samples: {} (ties {}), missing from own cuboid {}, found in another {}",
        r.sample_count, r.tie_samples, r.membership_violations, r.exclusivity_violations
    );
    if let Some(path) = &a.json {
        write_json(path, &r)?;
    }
    println!("violations: {}", r.violations());
    if r.passed() {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

/// Exact volume: the pyramid chain, or the sum over its rotations for the cube.
pub fn exact_volume(figure: Figure, n: usize) -> Rational {
    let chain = pyramid_chain(n);
    let vol = |c: &SimplexChain| chain_volume(c).expect("full-dimensional chain");
    match figure {
        Figure::Pyramid => vol(&chain),
        Figure::Cube => {
            let r = theta(n + 1);
            (0..=n)
                .map(|k| vol(&rotate_chain(&chain, &r, k).expect("same dimension")))
                .sum()
        }
    }
}

fn volume_cmd(a: VolumeArgs) -> Outcome {
    match a.method {
        Method::Exact => {
            limit("exact volume", a.n, MAX_EXACT_N)?;
            println!("{}", exact_volume(a.figure, a.n));
        }
        Method::Mc => {
            if a.samples == 0 {
                return Err(Failure::Usage("--samples must be at least 1".into()));
            }
            let d = a.n + 1;
            let e = match a.figure {
                Figure::Pyramid => mc_volume(d, d, a.samples, a.seed),
                Figure::Cube => mc_estimate(d, a.samples, a.seed, |_| true),
            };
            println!(
                "{:.6} +/- {:.6} (samples {}, seed {})",
                e.estimate, e.stderr, e.samples, e.seed
            );
        }
    }
    Ok(())
}

fn decompose_cmd(a: DecomposeArgs) -> Outcome {
    limit("decompose", a.n, MAX_DECOMPOSE_N)?;
    let chain = match a.figure {
        Figure::Cube => cube_chain(a.n + 1),
        Figure::Pyramid => pyramid_chain(a.n),
    };
    let vol = chain_volume(&chain)?;
    write_json(&a.out, &chain)?;
    println!(
        "{} simplices, total volume {}, written to {}",
        chain.simplices.len(),
        vol,
        a.out.display()
    );
    let expected = match a.figure {
        Figure::Cube => vol.is_one(),
        Figure::Pyramid => vol == Rational::new(1.into(), ((a.n + 1) as i64).into()),
    };
    if expected {
        Ok(())
    } else {
        Err(Failure::Check)
    }
}

fn render_cmd(a: RenderArgs) -> Outcome {
    let scene = build_scene(a.n)?;
    let mut spec = FrameSpec::new(a.t, a.projection.into(), a.format.into());
    spec.size = a.size;
    let bytes = render_frame(&scene, &spec)?;
    write_file(&a.out, &bytes)?;
    println!("wrote {}", a.out.display());
    Ok(())
}

fn animate_cmd(a: AnimateArgs) -> Outcome {
    if a.frames == 0 {
        return Err(Failure::Usage("--frames must be at least 1".into()));
    }
    let kind: ProjectionKind = a.projection.into();
    let format = a
        .format
        .map(OutputFormat::from)
        .unwrap_or(if kind.output_rows() == 2 {
            OutputFormat::Svg
        } else {
            OutputFormat::Obj
        });
    let scene = build_scene(a.n)?;
    let frames = animate(&scene, kind, format, a.frames)?;
    for (name, bytes) in &frames {
        write_file(&a.outdir.join(name), bytes)?;
    }
    println!("wrote {} frames to {}", frames.len(), a.outdir.display());
    Ok(())
}

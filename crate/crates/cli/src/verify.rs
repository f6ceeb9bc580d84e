//! Grid expansion for `verify`.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use hurwitz_core::hurwitz::{verify_eq2, verify_neg_int, verify_recurrence, verify_representations};
use hurwitz_core::identities::verify_identity;
use hurwitz_core::{Complex64, Identity, IdentityArgs, IdentityReport, Tolerances};
use rayon::prelude::*;

use crate::grid::GridSpec;
use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Check {
    Identity(Identity),
    Fubini,
    Representations,
    Recurrence,
    NegInt,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::Identity(Identity::Chen),
        Check::Identity(Identity::Legendre),
        Check::Identity(Identity::Arctan),
        Check::Identity(Identity::Limit),
        Check::Fubini,
        Check::Representations,
        Check::Recurrence,
        Check::NegInt,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Identity(id) => id.name(),
            Check::Fubini => "fubini",
            Check::Representations => "eq3-eq4",
            Check::Recurrence => "recurrence",
            Check::NegInt => "neg-int",
        }
    }

    fn accepts(self, axis: Axis) -> bool {
        use Axis::*;
        match self {
            Check::Identity(Identity::Chen) => matches!(axis, S | SIm | U | X),
            Check::Identity(Identity::Legendre) => axis == T,
            Check::Identity(Identity::Arctan) => matches!(axis, U | X),
            Check::Identity(Identity::Limit) => matches!(axis, S | U | X),
            Check::Fubini | Check::Representations | Check::Recurrence => matches!(axis, S | SIm | U),
            Check::NegInt => matches!(axis, N | U),
        }
    }

    fn default_axes(self) -> Axes {
        let real = |v: &[f64]| v.iter().map(|&re| Complex64::new(re, 0.0)).collect::<Vec<_>>();
        let mut axes = Axes::default();
        match self {
            Check::Identity(Identity::Chen) => {
                axes.s = real(&[0.5, 1.0, 1.5, 2.5, 4.0]);
                axes.u = vec![0.5, 1.0, 3.0];
                axes.x = vec![0.0, 0.5, 2.0, 10.0];
            }
            Check::Identity(Identity::Legendre) => {
                axes.t = vec![1e-3, 0.1, 1.0, 2.0 * PI, 10.0, 50.0];
            }
            Check::Identity(Identity::Arctan) => {
                axes.u = vec![0.25, 1.0, 4.0];
                axes.x = vec![0.0, 0.5, 1.0, 10.0];
            }
            Check::Identity(Identity::Limit) => {
                axes.s = real(&[1e-2, 1e-3, 1e-4, 1e-5, 1e-6]);
            }
            Check::Fubini => {
                axes.s = real(&[0.5, 1.5, 2.0]);
                axes.u = vec![1.0, 2.0];
            }
            Check::Representations => {
                axes.s = real(&[-0.5, -0.9, 0.5, 2.5]);
                axes.s.push(Complex64::new(3.0, 4.0));
                axes.u = vec![0.5, 1.0, 3.0];
            }
            Check::Recurrence => {
                axes.s = real(&[-0.9, -0.5, 0.5, 1.5, 2.0, 2.5, 3.0, 5.5]);
                axes.s.extend([
                    Complex64::new(3.0, 4.0),
                    Complex64::new(2.0, 3.0),
                    Complex64::new(2.0, -3.0),
                ]);
                axes.u = vec![0.25, 0.5, 1.0, 2.0, 7.0];
            }
            Check::NegInt => {
                axes.n = (0..=5).collect();
                axes.u = vec![0.3, 1.0, 2.5];
            }
        }
        axes
    }
}

impl FromStr for Check {
    type Err = CliError;

    fn from_str(text: &str) -> Result<Self, CliError> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == text)
            .ok_or_else(|| CliError::Core(hurwitz_core::Error::UnknownIdentity(text.to_string())))
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Axis {
    S,
    SIm,
    U,
    X,
    T,
    N,
}

impl Axis {
    fn flag(self) -> &'static str {
        match self {
            Axis::S => "--s-grid",
            Axis::SIm => "--s-im",
            Axis::U => "--u-grid",
            Axis::X => "--x-grid",
            Axis::T => "--t-grid",
            Axis::N => "--n-grid",
        }
    }
}

/// Grid flags as given on the command line; unset axes fall back to the
/// check's default set.
#[derive(Debug, Clone, Default)]
pub struct GridFlags {
    pub s_grid: Option<GridSpec>,
    pub s_im: Option<f64>,
    pub u_grid: Option<GridSpec>,
    pub x_grid: Option<GridSpec>,
    pub t_grid: Option<GridSpec>,
    pub n_grid: Option<GridSpec>,
}

#[derive(Debug, Clone, Default)]
struct Axes {
    s: Vec<Complex64>,
    u: Vec<f64>,
    x: Vec<f64>,
    t: Vec<f64>,
    n: Vec<usize>,
}

/// One evaluation point of a check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point {
    pub args: IdentityArgs,
    pub n: usize,
}

/// Expand the flags into points in row-major order (s, n outermost; then u, x, t).
pub fn points(check: Check, flags: &GridFlags) -> Result<Vec<Point>, CliError> {
    let given = [
        (Axis::S, flags.s_grid.is_some()),
        (Axis::SIm, flags.s_im.is_some()),
        (Axis::U, flags.u_grid.is_some()),
        (Axis::X, flags.x_grid.is_some()),
        (Axis::T, flags.t_grid.is_some()),
        (Axis::N, flags.n_grid.is_some()),
    ];
    for (axis, present) in given {
        if present && !check.accepts(axis) {
            return Err(CliError::Usage(format!(
                "{} does not apply to --identity {check}",
                axis.flag()
            )));
        }
    }
    if flags.s_im.is_some() && flags.s_grid.is_none() {
        return Err(CliError::Usage("--s-im needs --s-grid".into()));
    }

    let mut axes = check.default_axes();
    if let Some(grid) = flags.s_grid {
        let im = flags.s_im.unwrap_or(0.0);
        axes.s = grid.points().into_iter().map(|re| Complex64::new(re, im)).collect();
    }
    if let Some(grid) = flags.u_grid {
        axes.u = grid.points();
    }
    if let Some(grid) = flags.x_grid {
        axes.x = grid.points();
    }
    if let Some(grid) = flags.t_grid {
        axes.t = grid.points();
    }
    if let Some(grid) = flags.n_grid {
        axes.n = grid
            .points()
            .into_iter()
            .map(|n| {
                if n >= 0.0 && n.fract() == 0.0 {
                    Ok(n as usize)
                } else {
                    Err(CliError::Usage(format!("--n-grid needs nonnegative integers, got {n}")))
                }
            })
            .collect::<Result<_, _>>()?;
    }

    let base = IdentityArgs::default();
    let or_default = |v: Vec<f64>, d: f64| if v.is_empty() { vec![d] } else { v };
    let s_axis = if axes.s.is_empty() { vec![base.s] } else { axes.s };
    let n_axis = if axes.n.is_empty() { vec![0] } else { axes.n };
    let u_axis = or_default(axes.u, base.u);
    let x_axis = or_default(axes.x, base.x);
    let t_axis = or_default(axes.t, base.t);

    let mut out = Vec::new();
    for &s in &s_axis {
        for &n in &n_axis {
            for &u in &u_axis {
                for &x in &x_axis {
                    for &t in &t_axis {
                        let s = if check == Check::NegInt {
                            Complex64::new(-(n as f64), 0.0)
                        } else {
                            s
                        };
                        out.push(Point {
                            args: IdentityArgs { s, u, x, t },
                            n,
                        });
                    }
                }
            }
        }
    }
    Ok(out)
}

pub fn run_point(check: Check, point: Point, tol: &Tolerances) -> hurwitz_core::Result<IdentityReport> {
    let IdentityArgs { s, u, .. } = point.args;
    match check {
        Check::Identity(id) => verify_identity(id, point.args, tol),
        Check::Fubini => verify_eq2(s, u, tol),
        Check::Representations => verify_representations(s, u, tol),
        Check::Recurrence => verify_recurrence(s, u, tol),
        Check::NegInt => verify_neg_int(point.n, u, tol),
    }
}

/// Evaluate every point concurrently; reports come back in input order.
pub fn run_all(check: Check, points: &[Point], tol: &Tolerances) -> Result<Vec<IdentityReport>, CliError> {
    points
        .par_iter()
        .map(|&p| run_point(check, p, tol).map_err(CliError::from))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_grids_have_the_declared_sizes() {
        let sizes = [
            ("chen", 60),
            ("legendre", 6),
            ("arctan", 12),
            ("limit", 5),
            ("fubini", 6),
            ("eq3-eq4", 15),
            ("recurrence", 55),
            ("neg-int", 18),
        ];
        for (name, want) in sizes {
            let check: Check = name.parse().unwrap();
            assert_eq!(points(check, &GridFlags::default()).unwrap().len(), want, "{name}");
        }
    }

    #[test]
    fn flags_replace_defaults() {
        let flags = GridFlags {
            x_grid: Some("0:10:1".parse().unwrap()),
            u_grid: Some("1:1:1".parse().unwrap()),
            ..Default::default()
        };
        let pts = points(Check::Identity(Identity::Arctan), &flags).unwrap();
        assert_eq!(pts.len(), 11);
        assert_eq!(pts[3].args.x, 3.0);

        let flags = GridFlags {
            s_grid: Some("2:3:1".parse().unwrap()),
            s_im: Some(1.0),
            ..Default::default()
        };
        let pts = points(Check::Fubini, &flags).unwrap();
        assert_eq!(pts.len(), 4);
        assert_eq!(pts[0].args.s, Complex64::new(2.0, 1.0));
        assert_eq!(pts[1].args.u, 2.0);
    }

    #[test]
    fn neg_int_points_carry_s() {
        let flags = GridFlags {
            n_grid: Some("2:3:1".parse().unwrap()),
            u_grid: Some("1".parse().unwrap()),
            ..Default::default()
        };
        let pts = points(Check::NegInt, &flags).unwrap();
        assert_eq!(pts.iter().map(|p| p.args.s.re).collect::<Vec<_>>(), vec![-2.0, -3.0]);
    }

    #[test]
    fn misplaced_flags_are_rejected() {
        let t = GridFlags {
            t_grid: Some("1".parse().unwrap()),
            ..Default::default()
        };
        assert!(matches!(
            points(Check::Identity(Identity::Chen), &t),
            Err(CliError::Usage(_))
        ));
        let im_only = GridFlags {
            s_im: Some(1.0),
            ..Default::default()
        };
        assert!(points(Check::Recurrence, &im_only).is_err());
        let frac = GridFlags {
            n_grid: Some("0:1:0.5".parse().unwrap()),
            ..Default::default()
        };
        assert!(points(Check::NegInt, &frac).is_err());
        assert!("zeta".parse::<Check>().is_err());
    }
}

use clap::ValueEnum;

use super::output::{Cell, Table};
use super::{pick_list, CliError, Format, SweepArgs};
use crate::deformed_numbers::{basic_number, Deformation};
use crate::series::SummationMethod;
use crate::thermo_classical::{classical_report, ThermalPoint};
use crate::thermo_deformed::{
    corrected_distribution, deformed_partition, deformed_spectrum,
    naive_first_order_distribution_closed, naive_first_order_distribution_series,
    naive_internal_energy,
};

/// Sweepable quantities, in output order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Quantity {
    BasicNumbers,
    Spectrum,
    Partition,
    FNaiveClosed,
    FNaiveSeries,
    FCorrected,
    UNaive,
    ClassicalReport,
}

impl Quantity {
    pub const ALL: [Quantity; 8] = [
        Quantity::BasicNumbers,
        Quantity::Spectrum,
        Quantity::Partition,
        Quantity::FNaiveClosed,
        Quantity::FNaiveSeries,
        Quantity::FCorrected,
        Quantity::UNaive,
        Quantity::ClassicalReport,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Quantity::BasicNumbers => "basic_numbers",
            Quantity::Spectrum => "spectrum",
            Quantity::Partition => "partition",
            Quantity::FNaiveClosed => "f_naive_closed",
            Quantity::FNaiveSeries => "f_naive_series",
            Quantity::FCorrected => "f_corrected",
            Quantity::UNaive => "u_naive",
            Quantity::ClassicalReport => "classical_report",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub q_values: Vec<Deformation>,
    pub x_values: Vec<ThermalPoint>,
    pub n_max: usize,
    pub quantities: Vec<Quantity>,
}

impl SweepSpec {
    pub fn new(
        q: &[f64],
        x: &[f64],
        n_max: usize,
        quantities: &[Quantity],
    ) -> Result<Self, String> {
        if q.is_empty() || x.is_empty() || quantities.is_empty() {
            return Err("q, x and quantity lists must be non-empty".into());
        }
        if n_max == 0 {
            return Err("--n-max must be positive".into());
        }
        let q_values = q
            .iter()
            .map(|&q| Deformation::from_q(q).map_err(|e| e.to_string()))
            .collect::<Result<Vec<_>, _>>()?;
        let x_values = x
            .iter()
            .map(|&x| ThermalPoint::new(x).map_err(|e| e.to_string()))
            .collect::<Result<Vec<_>, _>>()?;
        let mut quantities = quantities.to_vec();
        quantities.sort();
        quantities.dedup();
        Ok(SweepSpec {
            q_values,
            x_values,
            n_max,
            quantities,
        })
    }

    pub(crate) fn from_args(args: &SweepArgs) -> Result<Self, CliError> {
        let q = pick_list(args.q, args.q_list.as_ref())
            .ok_or_else(|| CliError::Usage("one of --q or --q-list is required".into()))?;
        let x = pick_list(args.x, args.x_list.as_ref())
            .ok_or_else(|| CliError::Usage("one of --x or --x-list is required".into()))?;
        let quantities = args
            .quantities
            .clone()
            .unwrap_or_else(|| Quantity::ALL.to_vec());
        SweepSpec::new(&q, &x, args.n_max, &quantities).map_err(CliError::Usage)
    }
}

fn cells_for(
    quantity: Quantity,
    d: Deformation,
    t: ThermalPoint,
    n_max: usize,
) -> Vec<(String, Cell)> {
    match quantity {
        Quantity::BasicNumbers => (0..=n_max)
            .map(|n| (n.to_string(), basic_number(n, d).into()))
            .collect(),
        Quantity::Spectrum => match deformed_spectrum(n_max, d) {
            Ok(s) => s
                .levels
                .iter()
                .enumerate()
                .map(|(n, e)| (n.to_string(), Cell::Float(*e)))
                .collect(),
            Err(e) => vec![("levels".into(), Cell::Token(e.token()))],
        },
        Quantity::Partition => {
            let z = deformed_partition(d, t, n_max);
            vec![
                ("value".into(), z.value.into()),
                ("converged".into(), z.converged.into()),
                ("n_max_used".into(), z.n_max_used.into()),
                ("residual_estimate".into(), z.residual_estimate.into()),
                ("diverged_at".into(), z.diverged_at.into()),
            ]
        }
        Quantity::FNaiveClosed => vec![(
            "value".into(),
            naive_first_order_distribution_closed(d, t).into(),
        )],
        Quantity::FNaiveSeries => {
            let formal = naive_first_order_distribution_series(
                d,
                t,
                n_max,
                SummationMethod::GeometricClosedForm,
            )
            .map(|e| e.value);
            let literal = naive_first_order_distribution_series(
                d,
                t,
                n_max,
                SummationMethod::TruncatedTermwise,
            )
            .expect("termwise summation reports divergence instead of failing");
            vec![
                (
                    SummationMethod::GeometricClosedForm.as_str().into(),
                    formal.into(),
                ),
                (
                    SummationMethod::TruncatedTermwise.as_str().into(),
                    literal.value.into(),
                ),
                ("termwise_converged".into(), literal.converged.into()),
                ("termwise_diverged_at".into(), literal.diverged_at.into()),
            ]
        }
        Quantity::FCorrected => vec![("value".into(), corrected_distribution(t).into())],
        Quantity::UNaive => vec![(
            "per_oscillator".into(),
            naive_internal_energy(1, d, t).into(),
        )],
        Quantity::ClassicalReport => {
            let r = classical_report(t);
            vec![
                ("Z".into(), r.partition.into()),
                ("F".into(), r.free_energy.into()),
                ("S".into(), r.entropy.into()),
                ("U_per_osc".into(), r.internal_energy_per_osc.into()),
                ("f".into(), r.distribution.into()),
                ("P0".into(), r.occupation_probs[0].into()),
                ("P1".into(), r.occupation_probs[1].into()),
            ]
        }
    }
}

/// Rows ordered by `q` (outer), `x`, then quantity.
pub fn sweep_table(spec: &SweepSpec) -> Table {
    let mut t = Table::new(vec!["q", "x", "quantity", "component", "value"]);
    for d in &spec.q_values {
        for tp in &spec.x_values {
            for &quantity in &spec.quantities {
                for (component, value) in cells_for(quantity, *d, *tp, spec.n_max) {
                    t.push(vec![
                        Cell::Float(d.q()),
                        Cell::Float(tp.x()),
                        Cell::Text(quantity.name().into()),
                        Cell::Text(component),
                        value,
                    ]);
                }
            }
        }
    }
    t
}

pub(crate) fn render(spec: &SweepSpec, format: Format) -> Result<String, CliError> {
    sweep_table(spec).render(format)
}

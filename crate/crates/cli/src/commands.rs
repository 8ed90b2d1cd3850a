use serde_json::{json, Value};
use zonalkit::rational::{self, Rational};
use zonalkit::{
    anisotropic_cumulants, free_cumulants, jack_oracle, kerov_oracle, kerov_polynomial_combinatorial, map_stats,
    stanley_polynomial, symplectic_character, symplectic_kerov, zonal_character, zonal_character_oracle,
    zonal_character_orbit_formula, zonal_polynomial, Alpha, Error, MultiRect, PairPartition, Partition,
};

use crate::args::{CharacterMethod, Command, Format, KerovMethod};

/// A computation ready to run, with the canonical form of its arguments.
pub struct Job {
    pub name: &'static str,
    pub args: Value,
    pub format: Format,
    run: Box<dyn FnOnce() -> zonalkit::Result<String>>,
}

impl Job {
    pub fn run(self) -> zonalkit::Result<String> {
        (self.run)()
    }
}

enum Diagram {
    Partition(Partition),
    Rect(MultiRect),
}

impl Diagram {
    fn parse(s: &str) -> zonalkit::Result<Diagram> {
        if s.contains('=') {
            let m = MultiRect::parse(s)?;
            Ok(match m.to_partition() {
                Ok(p) => Diagram::Partition(p),
                Err(_) => Diagram::Rect(m),
            })
        } else {
            Ok(Diagram::Partition(Partition::parse(s)?))
        }
    }

    fn canonical(&self) -> Value {
        match self {
            Diagram::Partition(p) => json!(p.parts()),
            Diagram::Rect(m) => json!(m.to_string()),
        }
    }

    fn multirect(&self) -> MultiRect {
        match self {
            Diagram::Partition(p) => MultiRect::of_partition(p),
            Diagram::Rect(m) => m.clone(),
        }
    }
}

fn parse_mu(s: &str) -> zonalkit::Result<Partition> {
    let mu = Partition::parse(s)?;
    if mu.is_empty() {
        return Err(Error::Validation("mu must be non-empty".into()));
    }
    Ok(mu)
}

fn alpha_of(s: &str) -> zonalkit::Result<Alpha> {
    s.parse()
}

fn value_output(format: Format, value: &Rational, fields: Value) -> String {
    match format {
        Format::Text => value.to_string(),
        Format::Json => {
            let mut obj = fields;
            obj["value"] = json!(value.to_string());
            obj.to_string()
        }
    }
}

pub fn build(command: Command, format: Option<Format>) -> zonalkit::Result<Job> {
    let text_default = format.unwrap_or(Format::Text);
    Ok(match command {
        Command::Zonal { lambda, oracle } => {
            let lambda = Partition::parse(&lambda)?;
            let args = json!({"lambda": lambda.parts(), "oracle": oracle});
            Job {
                name: "zonal",
                args,
                format: text_default,
                run: Box::new(move || {
                    let z = if oracle {
                        jack_oracle(&lambda)?
                    } else {
                        zonal_polynomial(&lambda)?
                    };
                    Ok(match text_default {
                        Format::Text => z.to_text(),
                        Format::Json => z.to_json(),
                    })
                }),
            }
        }
        Command::Character {
            mu,
            lambda,
            alpha,
            method,
        } => {
            let mu = parse_mu(&mu)?;
            let diagram = Diagram::parse(&lambda)?;
            let alpha = alpha_of(&alpha)?;
            let fields = json!({
                "mu": mu.parts(),
                "lambda": diagram.canonical(),
                "alpha": alpha.to_string(),
                "method": method.name(),
            });
            Job {
                name: "character",
                args: fields.clone(),
                format: text_default,
                run: Box::new(move || {
                    let v = character(&mu, &diagram, alpha, method)?;
                    Ok(value_output(text_default, &v, fields))
                }),
            }
        }
        Command::Stanley { mu, rectangles } => {
            let mu = parse_mu(&mu)?;
            let m = rectangles.unwrap_or(mu.size());
            Job {
                name: "stanley",
                args: json!({"mu": mu.parts(), "rectangles": m}),
                format: text_default,
                run: Box::new(move || {
                    let f = stanley_polynomial(&mu, m)?;
                    Ok(match text_default {
                        Format::Text => f.to_text(),
                        Format::Json => f.to_json(),
                    })
                }),
            }
        }
        Command::Cumulants { lambda, upto, alpha } => {
            let diagram = Diagram::parse(&lambda)?;
            let alpha = alpha.map(|a| rational::parse(&a)).transpose()?;
            if upto == 0 {
                return Err(Error::Validation("--upto must be at least 1".into()));
            }
            let fields = json!({
                "lambda": diagram.canonical(),
                "alpha": alpha.as_ref().map(|a| a.to_string()),
                "upto": upto,
            });
            Job {
                name: "cumulants",
                args: fields.clone(),
                format: text_default,
                run: Box::new(move || {
                    let m = diagram.multirect();
                    let r = match &alpha {
                        Some(a) => anisotropic_cumulants(&m, a, upto)?,
                        None => free_cumulants(&m, upto)?,
                    };
                    Ok(match text_default {
                        Format::Text => r
                            .iter()
                            .enumerate()
                            .map(|(i, v)| format!("R{} = {v}", i + 1))
                            .collect::<Vec<_>>()
                            .join("\n"),
                        Format::Json => {
                            let mut obj = fields;
                            obj["cumulants"] = json!(r.iter().map(|v| v.to_string()).collect::<Vec<_>>());
                            obj.to_string()
                        }
                    })
                }),
            }
        }
        Command::Kerov { mu, method, alpha } => {
            let mu = parse_mu(&mu)?;
            let alpha = alpha_of(&alpha)?;
            let format = format.unwrap_or(Format::Json);
            if method == KerovMethod::Oracle && (mu.len() != 1 || alpha != Alpha::Two) {
                return Err(Error::Validation(
                    "the oracle handles one-part mu with alpha 2 only".into(),
                ));
            }
            Job {
                name: "kerov",
                args: json!({"mu": mu.parts(), "method": method.name(), "alpha": alpha.to_string()}),
                format,
                run: Box::new(move || {
                    let f = match (method, alpha) {
                        (KerovMethod::Oracle, _) => kerov_oracle(mu.size())?,
                        (KerovMethod::Count, Alpha::Two) => kerov_polynomial_combinatorial(&mu)?,
                        (KerovMethod::Count, Alpha::Half) => symplectic_kerov(&mu)?,
                    };
                    Ok(match format {
                        Format::Text => f.to_text(),
                        Format::Json => f.to_json(),
                    })
                }),
            }
        }
        Command::MapStats { mu, s0 } => {
            let mu = parse_mu(&mu)?;
            let s0: PairPartition =
                serde_json::from_str(&s0).map_err(|e| Error::Validation(format!("bad --s0: {e}")))?;
            Job {
                name: "map-stats",
                args: json!({"mu": mu.parts(), "s0": s0}),
                format: text_default,
                run: Box::new(move || {
                    let st = map_stats(&mu, &s0)?;
                    Ok(match text_default {
                        Format::Text => format!(
                            "black={} white={} edges={} faces={} euler_characteristic={} connected={} orientable={}",
                            st.black,
                            st.white,
                            st.edges,
                            st.faces,
                            st.euler_characteristic,
                            st.connected,
                            st.orientable
                        ),
                        Format::Json => serde_json::to_string(&st).expect("serializable"),
                    })
                }),
            }
        }
        Command::Selftest { .. } => unreachable!("selftest is dispatched separately"),
    })
}

fn character(mu: &Partition, diagram: &Diagram, alpha: Alpha, method: CharacterMethod) -> zonalkit::Result<Rational> {
    let m = diagram.multirect();
    match (method, alpha) {
        (CharacterMethod::Direct, Alpha::Two) => zonal_character(mu, &m),
        (CharacterMethod::Direct, Alpha::Half) => symplectic_character(mu, &m),
        (CharacterMethod::Orbit, Alpha::Two) => zonal_character_orbit_formula(mu, &m),
        (CharacterMethod::Orbit, Alpha::Half) => {
            Ok(zonal_character_orbit_formula(mu, &m.conjugate())? * symplectic_factor(mu))
        }
        (CharacterMethod::Oracle, _) => {
            let Diagram::Partition(lambda) = diagram else {
                return Err(Error::Validation("the oracle needs an integer partition".into()));
            };
            match alpha {
                Alpha::Two => zonal_character_oracle(mu, lambda),
                Alpha::Half => Ok(zonal_character_oracle(mu, &lambda.conjugate())? * symplectic_factor(mu)),
            }
        }
    }
}

// (−2)^{−(|μ|−ℓ(μ))}
fn symplectic_factor(mu: &Partition) -> Rational {
    rational::pow(&rational::int(-2), -((mu.size() - mu.len()) as i64))
}

use super::output::Table;
use super::{Cli, Command, Outcome};
use crate::critical::{self, ComponentInterval, CriticalResult, Membership, Settings, Status};
use crate::error::{Error, Result};
use crate::expand::{self, Alphabet, DigitWord};
use crate::numeric::rational::format_rational;
use crate::numeric::{parse_rational, Rational, Real};
use crate::words::AdmissibleSeq;

pub(super) fn execute(cli: &Cli) -> Result<(Table, Outcome)> {
    let g = &cli.global;
    let tol = parse_rational(&g.tol)?;
    if tol <= Rational::default() {
        return Err(Error::InvalidInput(format!("tolerance must be positive, got {}", g.tol)));
    }
    let settings = Settings { tol, max_depth: g.max_depth, allow_small_m: g.allow_small_m };
    let fmt = Render { digits: g.digits };
    match &cli.command {
        Command::Critical { m } => {
            let result = critical::p_m(&parse_rational(m)?, &settings)?;
            let outcome = outcome_of(std::slice::from_ref(&result));
            Ok((Table::from_records(vec![fmt.critical(&result)])?, outcome))
        }
        Command::G { alphabet } => {
            let result = critical::ternary_g(&Alphabet::parse(alphabet)?, &settings)?;
            let outcome = outcome_of(std::slice::from_ref(&result));
            Ok((Table::from_records(vec![fmt.critical(&result)])?, outcome))
        }
        Command::Table { lo, hi } => {
            let rows = critical::table(*lo, *hi, &settings)?;
            let records = rows.iter().map(|r| fmt.table_row(r)).collect();
            Ok((Table::from_records(records)?, outcome_of(&rows)))
        }
        Command::Curve { lo, hi, step } => {
            let rows = critical::curve(&parse_rational(lo)?, &parse_rational(hi)?, &parse_rational(step)?, &settings)?;
            let records = rows.iter().map(|r| fmt.curve_row(r)).collect();
            Ok((Table::from_records(records)?, outcome_of(&rows)))
        }
        Command::Cantor { m } => {
            let m = parse_rational(m)?;
            let membership = critical::in_cantor(&m, settings.max_depth)?;
            let mut table = Table::new(["m", "in_C"]);
            table.push(vec![format_rational(&m), membership.to_string()]);
            let outcome = if membership == Membership::DepthLimited { Outcome::DepthLimited } else { Outcome::Resolved };
            Ok((table, outcome))
        }
        Command::Interval { h } => {
            let h = parse_h(h)?;
            let d = if h.is_empty() { AdmissibleSeq::Zero } else { AdmissibleSeq::finite(h)? };
            let c = critical::component_interval(&d, &settings.tol)?;
            Ok((Table::from_records(vec![fmt.interval(&c)])?, Outcome::Resolved))
        }
        Command::Unique { base, alphabet, pre, per } => {
            let q = parse_rational(base)?;
            let alphabet = Alphabet::parse(alphabet)?;
            let word = parse_word(pre, per)?;
            let report = expand::is_unique(&word, &q, &alphabet)?;
            let violation = report.first_violation.as_ref();
            let record = vec![
                ("q", format_rational(&q)),
                ("alphabet", alphabet.to_string()),
                ("word", word.to_string()),
                ("unique", report.unique.to_string()),
                ("violation_position", violation.map(|v| v.position.to_string()).unwrap_or_default()),
                ("violation_condition", violation.map(|v| v.condition.to_string()).unwrap_or_default()),
            ];
            Ok((Table::from_records(vec![record])?, Outcome::Resolved))
        }
        Command::Qc { alphabet, pre, per } => {
            let alphabet = Alphabet::parse(alphabet)?;
            let word = parse_word(pre, per)?;
            let qc = expand::critical_base_of_sequence(&word, &alphabet, &settings.tol)?;
            let q_max = alphabet.q_max();
            let mut roots: Vec<Real> = qc.conditions.iter().map(|c| c.value(&q_max)).collect();
            roots.sort_by(|a, b| a.to_f64().total_cmp(&b.to_f64()));
            let mut rendered: Vec<String> = roots.iter().map(|r| fmt.real(r)).collect();
            rendered.dedup();
            let record = vec![
                ("alphabet", alphabet.to_string()),
                ("word", word.to_string()),
                ("q_c", fmt.real(&qc.value)),
                ("q_c_exact", fmt.exact(&qc.value)),
                ("condition_roots", rendered.join(";")),
            ];
            Ok((Table::from_records(vec![record])?, Outcome::Resolved))
        }
        Command::Expansions { x, q, alphabet, depth, cap } => {
            let alphabet = Alphabet::parse(alphabet)?;
            let found = expand::enumerate_expansions(&parse_rational(x)?, &parse_rational(q)?, &alphabet, *depth, *cap);
            let mut table = Table::new(["index", "prefix", "overflow"]);
            for (i, prefix) in found.prefixes.iter().enumerate() {
                let digits: Vec<String> = prefix.iter().map(format_rational).collect();
                table.push(vec![i.to_string(), digits.join(","), found.overflow.to_string()]);
            }
            Ok((table, Outcome::Resolved))
        }
    }
}

fn outcome_of(results: &[CriticalResult]) -> Outcome {
    if results.iter().any(|r| r.status == Status::DepthLimited) {
        Outcome::DepthLimited
    } else {
        Outcome::Resolved
    }
}

/// Comma-separated digits; `-` or an empty string is the empty list.
pub fn parse_digits(text: &str) -> Result<Vec<Rational>> {
    match text.trim() {
        "" | "-" => Ok(Vec::new()),
        t => t.split(',').map(parse_rational).collect(),
    }
}

pub fn parse_word(pre: &str, per: &str) -> Result<DigitWord> {
    let period = parse_digits(per)?;
    if period.is_empty() {
        return Err(Error::InvalidInput("the period must not be empty".into()));
    }
    DigitWord::new(parse_digits(pre)?, period)
}

/// Comma-separated positive h-parameters.
pub fn parse_h(text: &str) -> Result<Vec<u64>> {
    match text.trim() {
        "" | "-" => Ok(Vec::new()),
        t => t
            .split(',')
            .map(|x| {
                x.trim()
                    .parse::<u64>()
                    .ok()
                    .filter(|&v| v >= 1)
                    .ok_or_else(|| Error::InvalidInput(format!("h-parameters are positive integers, got {x:?}")))
            })
            .collect(),
    }
}

struct Render {
    digits: u32,
}

impl Render {
    fn real(&self, x: &Real) -> String {
        x.to_fixed(self.digits)
    }

    fn exact(&self, x: &Real) -> String {
        x.symbolic().unwrap_or_default()
    }

    fn h(d: &AdmissibleSeq) -> String {
        crate::words::blocks::format_h(d.h())
    }

    fn period(d: &AdmissibleSeq) -> String {
        match d.word() {
            Ok(w) => w.period().iter().map(u8::to_string).collect(),
            Err(_) => String::new(),
        }
    }

    fn word(d: &AdmissibleSeq) -> String {
        match d {
            AdmissibleSeq::InfinitePrefix(_) => d.to_string(),
            _ => d.word().map(|w| w.to_string()).unwrap_or_else(|_| d.to_string()),
        }
    }

    fn table_row(&self, r: &CriticalResult) -> Vec<(&'static str, String)> {
        vec![
            ("m", format_rational(&r.m)),
            ("N", r.d.h().len().to_string()),
            ("h", Self::h(&r.d)),
            ("d_period", Self::period(&r.d)),
            ("p_prime", self.real(&r.p_prime)),
            ("p_double_prime", self.real(&r.p_double_prime)),
            ("p", self.real(&r.p)),
            ("P", self.real(&r.big_p)),
            ("in_C", r.in_c.to_string()),
        ]
    }

    fn critical(&self, r: &CriticalResult) -> Vec<(&'static str, String)> {
        let mut record = self.table_row(r);
        let (lo, hi) = match &r.bracket {
            Some((lo, hi)) => (self.real(lo), self.real(hi)),
            None => (String::new(), String::new()),
        };
        record.extend([
            ("kind", r.d.kind_name().to_string()),
            ("d", Self::word(&r.d)),
            ("status", r.status.to_string()),
            ("small_m", r.small_m.to_string()),
            ("p_prime_exact", self.exact(&r.p_prime)),
            ("p_double_prime_exact", self.exact(&r.p_double_prime)),
            ("p_exact", self.exact(&r.p)),
            ("P_exact", self.exact(&r.big_p)),
            ("m_bracket_lo", lo),
            ("m_bracket_hi", hi),
        ]);
        record
    }

    fn curve_row(&self, r: &CriticalResult) -> Vec<(&'static str, String)> {
        vec![
            ("m", format_rational(&r.m)),
            ("p", self.real(&r.p)),
            ("P", self.real(&r.big_p)),
            ("component", Self::word(&r.d)),
            ("in_C", r.in_c.to_string()),
        ]
    }

    fn interval(&self, c: &ComponentInterval) -> Vec<(&'static str, String)> {
        vec![
            ("d", Self::word(&c.d)),
            ("h", Self::h(&c.d)),
            ("m_d", self.real(&c.m_d)),
            ("mu_d", self.real(&c.mu_d)),
            ("M_d", self.real(&c.big_m_d)),
            ("m_d_exact", self.exact(&c.m_d)),
            ("mu_d_exact", self.exact(&c.mu_d)),
            ("M_d_exact", self.exact(&c.big_m_d)),
        ]
    }
}


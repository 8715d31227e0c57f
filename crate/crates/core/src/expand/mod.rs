//! Expansions in non-integer bases over finite alphabets.

pub mod alphabet;
pub mod enumerate;
pub mod greedy;
pub mod pi;
pub mod qc;
pub mod unique;

pub use alphabet::Alphabet;
pub use enumerate::{enumerate_expansions, enumerate_expansions_with, EnumerateOptions, Enumeration};
pub use greedy::{quasi_greedy, quasi_greedy_word, quasi_lazy, quasi_lazy_word};
pub use pi::{eval_pi_closed, eval_pi_truncated, DigitWord};
pub use qc::{critical_base_of_sequence, ConditionRoot, CriticalBase, Threshold};
pub use unique::{is_unique, is_unique_ternary, ExpansionReport, Violation};

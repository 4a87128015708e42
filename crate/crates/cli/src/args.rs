use clap::{Parser, Subcommand};

/// Exact computations with Weil classes on J x J.
///
/// Classes in B^2 are six comma-separated rationals in the basis
/// w1^2, w1w2, w2^2, w1ws, w2ws, ws^2; classes in B^1 are three
/// (coefficients of w1, ws, w2); Cartans are integer triples A,B,C for the
/// form A x^2 + B xy + C y^2.
#[derive(Debug, Parser)]
#[command(name = "weil", version)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Dimension of J where it matters (1, 2 or 3).
    #[arg(long, global = true, default_value_t = 2)]
    pub n: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Stratum of a class with respect to Z and its singular locus S.
    Classify {
        #[arg(allow_hyphen_values = true)]
        class: String,
    },
    /// Recover the Cartan whose Weil plane contains a class of Z - S.
    FindK {
        #[arg(allow_hyphen_values = true)]
        class: String,
    },
    /// The pencil of Cartans whose Weil planes contain a class of S.
    Cayley {
        #[arg(allow_hyphen_values = true)]
        class: String,
    },
    /// Eigenforms and the Weil space of a Cartan.
    Eigenforms {
        #[arg(allow_hyphen_values = true)]
        cartan: String,
    },
    /// Pfaffian of a class of B^1 on J x J.
    Pfaffian {
        #[arg(allow_hyphen_values = true)]
        theta: String,
    },
    /// Whether a class lies in the Weil plane of a Cartan.
    Membership {
        #[arg(allow_hyphen_values = true)]
        class: String,
        #[arg(allow_hyphen_values = true)]
        cartan: String,
    },
    /// The point where two Weil planes meet.
    Intersect {
        #[arg(allow_hyphen_values = true)]
        cartan1: String,
        #[arg(allow_hyphen_values = true)]
        cartan2: String,
    },
    /// The class C_n and its Cayley pencil.
    Markman {
        #[arg(allow_hyphen_values = true, value_name = "N")]
        index: i64,
    },
    /// Discriminant of a polarization of Weil type.
    Discriminant {
        #[arg(allow_hyphen_values = true)]
        cartan: String,
        #[arg(allow_hyphen_values = true)]
        theta: String,
    },
    /// Elementary divisors of an integral polarization on Z^8.
    Eldiv {
        #[arg(allow_hyphen_values = true)]
        theta: String,
    },
    /// Run the full exact verification checklist.
    VerifyPaper,
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn negative_arguments_parse() {
        let cli = Cli::try_parse_from(["weil", "markman", "-2"]).unwrap();
        assert!(matches!(cli.command, Command::Markman { index: -2 }));
        let cli = Cli::try_parse_from(["weil", "--json", "classify", "-1,0,0,0,0,0"]).unwrap();
        assert!(cli.json);
    }
}

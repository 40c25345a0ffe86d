//! Solve diagonal ternary forms ax² + by² + cz² = 0.
//!
//!     cargo run --example legendre -- 3 5 -7

use bigeodetic::numbertheory::legendre_solvable;

fn render(coeffs: [i64; 3]) -> String {
    let mut out = String::new();
    for (c, var) in coeffs.into_iter().zip(["x²", "y²", "z²"]) {
        let sign = if c < 0 { "-" } else { "+" };
        let mag = if c.abs() == 1 {
            String::new()
        } else {
            c.abs().to_string()
        };
        if out.is_empty() {
            out = format!("{}{mag}{var}", if c < 0 { "-" } else { "" });
        } else {
            out.push_str(&format!(" {sign} {mag}{var}"));
        }
    }
    out + " = 0"
}

fn main() {
    let args: Vec<i64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer coefficients"))
        .collect();
    let forms = match args[..] {
        [a, b, c] => vec![[a, b, c]],
        [] => vec![
            [1, 1, -2],
            [1, -7, -2],
            [1, -6, -2],
            [3, 5, -7],
            [1, 1, 1],
            [5, -3, -7],
        ],
        _ => panic!("expected three coefficients"),
    };
    for [a, b, c] in forms {
        let out = legendre_solvable(a, b, c).expect("not the zero form");
        let eq = render([a, b, c]);
        match (out.witness, out.obstruction) {
            (Some(w), _) => println!("{eq}: solved by {w:?}"),
            (None, Some(o)) => println!("{eq}: no solution, obstruction at {:?}", o.place),
            (None, None) => println!("{eq}: no solution"),
        }
    }
}

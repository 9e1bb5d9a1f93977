#![no_main]

use libfuzzer_sys::fuzz_target;
use seidelcert::graphs::parse_expr;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Ok(expr) = parse_expr(text) else { return };
    let again = parse_expr(&expr.to_string()).expect("printed expression reparses");
    assert_eq!(again.to_string(), expr.to_string());
    if let Ok((n, m)) = expr.size() {
        if n <= 2_000 && m <= 200_000 {
            let g = expr.eval().expect("sized expression evaluates");
            assert_eq!(g.n() as u128, n);
            assert_eq!(g.edge_count() as u128, m);
        }
    }
});

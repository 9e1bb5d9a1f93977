#![no_main]

use libfuzzer_sys::fuzz_target;
use seidelcert::graphs::Graph;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(g) = Graph::from_lines(text) {
        assert_eq!(Graph::from_lines(&g.to_lines()).unwrap(), g);
    }
});

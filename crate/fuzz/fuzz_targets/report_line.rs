#![no_main]

use libfuzzer_sys::fuzz_target;
use seidelcert::report::ClaimReport;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(r) = ClaimReport::parse_line(text) {
        let line = r.to_line();
        assert_eq!(ClaimReport::parse_line(&line).unwrap().to_line(), line);
    }
});

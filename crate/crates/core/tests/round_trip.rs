use sullivan::io::{self, parse_file, parse_model, print_file, print_model, strip_comments};
use sullivan::suite::{random_corpus, SuiteConfig};

#[test]
fn bundled_files_print_canonically() {
    for b in io::BUNDLED
        .iter()
        .chain(io::FIXTURES.iter())
        .filter(|b| b.file != "broken.sm")
    {
        let f = parse_file(b.text).unwrap_or_else(|e| panic!("{}: {e}", b.file));
        let printed = print_file(&f);
        assert_eq!(printed, strip_comments(b.text), "{}", b.file);
        assert_eq!(
            print_file(&parse_file(&printed).unwrap()),
            printed,
            "{}",
            b.file
        );
    }
}

#[test]
fn random_models_survive_printing() {
    let mut cfg = SuiteConfig::new(7);
    cfg.corpus_size = 40;
    for m in random_corpus(&cfg) {
        let text = print_model(&m);
        let back = parse_model(&text).unwrap_or_else(|e| panic!("{text}\n{e}"));
        assert_eq!(print_model(&back), text);
        assert_eq!(back.nilpotency_class(), m.nilpotency_class());
    }
}

#[test]
fn every_bundled_model_is_valid() {
    for f in io::bundled() {
        let r = f.primary().validate();
        assert!(r.is_valid(), "{}: {r:?}", f.primary().name());
    }
}

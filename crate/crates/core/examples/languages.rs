//! Bounded language fragments: shuffle, Kleene and shuffle closures, the
//! half-prefix operator, and the set system of a family of languages.

use setsys::lang::{closure_bounded, half, shuffle_product, shuffle_words, to_set_system, ClosureKind, LanguageFragment, Word};
use setsys::dim;

fn words(f: &LanguageFragment) -> String {
    f.words().iter().map(|w| w.to_string()).collect::<Vec<_>>().join(" ")
}

fn main() -> setsys::Result<()> {
    let sh = shuffle_words(&Word::from_chars("ab"), &Word::from_chars("cd"));
    println!("sh(ab, cd): {} words", sh.len());

    let l = LanguageFragment::from_strs(&["a", "ab"], 4, &["b"])?;
    let m = LanguageFragment::from_strs(&["b"], 4, &["a"])?;
    println!("L ⧢ M   = {}", words(&shuffle_product(&l, &m)?));
    for kind in [ClosureKind::Star, ClosureKind::Plus, ClosureKind::ShuffleDiamond, ClosureKind::ShuffleClosure] {
        println!("{kind:?}: {}", words(&closure_bounded(&l, kind, 3)));
    }
    let h = half(&closure_bounded(&l, ClosureKind::Star, 4));
    println!("half of L*: {} (exact {})", words(&h), h.exact_up_to());

    let fam = to_set_system(&[l.clone(), m, l.with_empty_word()])?;
    println!("as a set system over {} words: dim {}", fam.universe().len(), dim(&fam));
    Ok(())
}

//! Runs the guide's code snippets as doc-tests so the book in
//! `book/` can never drift from the library it documents.

macro_rules! chapter {
    ($name:ident, $path:literal) => {
        #[doc = include_str!($path)]
        mod $name {}
    };
}

chapter!(readme, "../../../README.md");
chapter!(introduction, "../../../book/src/introduction.md");
chapter!(graphs_and_files, "../../../book/src/graphs-and-files.md");
chapter!(
    labelings_and_verification,
    "../../../book/src/labelings-and-verification.md"
);
chapter!(
    closed_form_labelings,
    "../../../book/src/closed-form-labelings.md"
);
chapter!(exact_search, "../../../book/src/exact-search.md");
chapter!(
    sweeps_and_caching,
    "../../../book/src/sweeps-and-caching.md"
);

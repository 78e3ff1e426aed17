pub mod choosability;
pub mod counterexample;
pub mod generate;
pub mod graph;
pub mod procedure;
pub mod theta;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/plane-graphs.md")]
    mod plane_graphs {}
    #[doc = include_str!("../../../book/src/list-colouring.md")]
    mod list_colouring {}
    #[doc = include_str!("../../../book/src/theta.md")]
    mod theta {}
    #[doc = include_str!("../../../book/src/counterexample.md")]
    mod counterexample {}
    #[doc = include_str!("../../../book/src/procedure.md")]
    mod procedure {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}

//! Regenerates the tables of known examples and prints them as markdown.
use srgkit::survey::{run, Scope};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let scope: Scope = std::env::args().nth(1).as_deref().unwrap_or("ivanov").parse()?;
    let s = run(scope, false)?;
    print!("{}", s.markdown());
    println!("all rows match: {}", s.ok());
    Ok(())
}

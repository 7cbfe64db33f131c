fn main() {
    println!("covergen: placeholder, subcommands arrive with the pipeline");
}

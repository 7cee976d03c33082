fn main() {
    std::process::exit(rignewton::cli::main_entry());
}

// Writes every built-in algebra to DIR/<name>.json in the canonical file
// format.  Used to regenerate the golden files under data/golden.
#include <filesystem>
#include <iostream>

#include "hopfsmash/io.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: export_catalog DIR\n";
    return 2;
  }
  const std::filesystem::path dir(argv[1]);
  std::filesystem::create_directories(dir);
  for (const auto& name : hopfsmash::catalog_names()) {
    const std::filesystem::path path = dir / (name + ".json");
    hopfsmash::save_algebra(*hopfsmash::catalog_entry(name).algebra, path.string());
    std::cout << path.string() << "\n";
  }
  return 0;
}

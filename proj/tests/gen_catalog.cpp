// Regenerates the worked certificate files under catalog/.  Run manually
// after changing the canonical printers or the catalog definitions:
//   ./build/tests/gen_catalog catalog
#include <filesystem>
#include <iostream>

#include "catalog_entries.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: gen_catalog <output-dir>\n";
    return 2;
  }
  qtest::self_check_catalog_maps();
  std::filesystem::create_directories(argv[1]);
  for (const auto& entry : qtest::build_catalog()) {
    std::filesystem::path path = std::filesystem::path(argv[1]) / entry.name;
    qnull::write_text_file(path.string(),
                           qnull::serialize_certificate_file(entry.file));
    std::cout << "wrote " << path.string() << "\n";
  }
  return 0;
}

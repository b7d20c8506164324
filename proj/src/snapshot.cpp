#include "helibox/snapshot.hpp"

#include <bit>
#include <cstring>
#include <fstream>
#include <sstream>
#include <vector>

#include "helibox/errors.hpp"
#include "helibox/operators.hpp"
#include "helibox/timeseries.hpp" // format_cell

static_assert(std::endian::native == std::endian::little,
              "snapshot payloads are little-endian; add byte swapping before "
              "building on a big-endian target");

namespace helibox {

namespace {

const char* eos_kind_name(EosKind k) {
  return k == EosKind::polytropic ? "polytropic" : "ideal-gas";
}

EosKind eos_kind_from(const std::string& s, const std::string& path) {
  if (s == "polytropic")
    return EosKind::polytropic;
  if (s == "ideal-gas")
    return EosKind::ideal_gas;
  throw ConfigError(path + ": unknown eos kind '" + s + "'");
}

std::vector<const ScalarField*> field_list(const SystemState& s) {
  std::vector<const ScalarField*> fields = {&s.rho, &s.u.x, &s.u.y, &s.u.z};
  if (s.e)
    fields.push_back(&*s.e);
  if (s.B) {
    fields.push_back(&s.B->x);
    fields.push_back(&s.B->y);
    fields.push_back(&s.B->z);
  }
  return fields;
}

std::string field_names(const SystemState& s) {
  std::string names = "rho,ux,uy,uz";
  if (s.e)
    names += ",e";
  if (s.B)
    names += ",Bx,By,Bz";
  return names;
}

std::string expect_line(std::istream& in, const std::string& path) {
  std::string line;
  if (!std::getline(in, line))
    throw ConfigError(path + ": truncated snapshot header");
  return line;
}

// Splits "key rest-of-line" and checks the key.
std::string keyed(const std::string& line, const std::string& key,
                  const std::string& path) {
  if (line.rfind(key + " ", 0) != 0)
    throw ConfigError(path + ": expected '" + key + " ...', got '" + line +
                      "'");
  return line.substr(key.size() + 1);
}

double to_double(const std::string& s, const std::string& path) {
  try {
    return std::stod(s);
  } catch (const std::exception&) {
    throw ConfigError(path + ": bad number '" + s + "' in snapshot header");
  }
}

} // namespace

void write_snapshot(const std::string& path, const SystemState& state) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw ConfigError("cannot open '" + path + "' for writing");

  const int n = state.grid().n();
  std::ostringstream header;
  header << "helibox-snapshot v1\n";
  header << "system " << to_string(state.kind) << "\n";
  header << "n " << n << "\n";
  header << "L " << format_cell(state.grid().box_length()) << "\n";
  header << "t " << format_cell(state.t) << "\n";
  header << "eos " << eos_kind_name(state.eos.kind)
         << " gamma=" << format_cell(state.eos.gamma)
         << " K=" << format_cell(state.eos.K) << "\n";
  header << "rho_floor " << format_cell(state.rho_floor) << "\n";
  header << "fields " << field_names(state) << "\n";
  header << "layout x-fastest\n";
  header << "type float64 little-endian\n";

  const std::vector<const ScalarField*> fields = field_list(state);
  const std::size_t count = fields.size() * state.grid().size();
  header << "payload " << count << "\n";
  out << header.str();

  for (const ScalarField* f : fields) {
    const ScalarField phys = to_physical(*f);
    out.write(reinterpret_cast<const char*>(phys.phys()),
              static_cast<std::streamsize>(sizeof(double) *
                                           phys.grid().size()));
  }
  out.flush();
  if (!out)
    throw ConfigError("failed while writing '" + path + "'");
}

SystemState read_snapshot(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ConfigError("cannot open snapshot '" + path + "'");

  if (expect_line(in, path) != "helibox-snapshot v1")
    throw ConfigError(path + ": not a helibox snapshot");

  SystemState st;
  st.kind = system_from_string(keyed(expect_line(in, path), "system", path));
  const int n =
      static_cast<int>(to_double(keyed(expect_line(in, path), "n", path),
                                 path));
  const double L = to_double(keyed(expect_line(in, path), "L", path), path);
  st.t = to_double(keyed(expect_line(in, path), "t", path), path);

  {
    std::istringstream es(keyed(expect_line(in, path), "eos", path));
    std::string kind, g, k;
    es >> kind >> g >> k;
    st.eos.kind = eos_kind_from(kind, path);
    if (g.rfind("gamma=", 0) != 0 || k.rfind("K=", 0) != 0)
      throw ConfigError(path + ": malformed eos header line");
    st.eos.gamma = to_double(g.substr(6), path);
    st.eos.K = to_double(k.substr(2), path);
  }
  st.rho_floor =
      to_double(keyed(expect_line(in, path), "rho_floor", path), path);
  const std::string fields = keyed(expect_line(in, path), "fields", path);
  if (keyed(expect_line(in, path), "layout", path) != "x-fastest")
    throw ConfigError(path + ": unsupported layout");
  if (keyed(expect_line(in, path), "type", path) != "float64 little-endian")
    throw ConfigError(path + ": unsupported payload type");
  const std::size_t count = static_cast<std::size_t>(
      to_double(keyed(expect_line(in, path), "payload", path), path));

  const GridPtr grid = make_grid(n, L);
  st.rho = ScalarField(grid, Space::physical);
  st.u = VectorField(grid, Space::physical);

  std::string expected = "rho,ux,uy,uz";
  std::vector<ScalarField*> slots = {&st.rho, &st.u.x, &st.u.y, &st.u.z};
  const bool want_e = st.kind == SystemKind::comp_euler ||
                      st.kind == SystemKind::mhd;
  if (want_e) {
    st.e = ScalarField(grid, Space::physical);
    slots.push_back(&*st.e);
    expected += ",e";
  }
  if (st.kind == SystemKind::mhd) {
    st.B = VectorField(grid, Space::physical);
    slots.push_back(&st.B->x);
    slots.push_back(&st.B->y);
    slots.push_back(&st.B->z);
    expected += ",Bx,By,Bz";
  }
  if (fields != expected)
    throw ConfigError(path + ": field list '" + fields +
                      "' does not match system " + to_string(st.kind));
  if (count != slots.size() * grid->size())
    throw ConfigError(path + ": payload count mismatch");

  for (ScalarField* f : slots) {
    in.read(reinterpret_cast<char*>(f->phys()),
            static_cast<std::streamsize>(sizeof(double) * grid->size()));
    if (!in)
      throw ConfigError(path + ": truncated payload");
  }
  char extra = 0;
  if (in.read(&extra, 1))
    throw ConfigError(path + ": trailing bytes after payload");
  return st;
}

} // namespace helibox

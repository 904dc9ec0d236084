#include "meshcal/mesh.hpp"

#include "meshcal/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace meshcal {

std::vector<std::string> validate(const Mesh& mesh) {
    std::vector<std::string> violations;
    const int n = mesh.vertex_count();
    for (int j = 0; j < n; ++j)
        if (!mesh.vertices[static_cast<size_t>(j)].finite())
            violations.push_back("vertex " + std::to_string(j) + " has non-finite coordinates");
    for (size_t f = 0; f < mesh.faces.size(); ++f)
        for (int idx : mesh.faces[f])
            if (idx < 0 || idx >= n)
                violations.push_back("face " + std::to_string(f) + " references vertex " +
                                     std::to_string(idx) + " outside [0, " + std::to_string(n) +
                                     ")");
    return violations;
}

namespace {

// "3", "3/1", "3//2", "3/1/2" -> 3
int parse_face_index(const std::string& token, const std::string& context) {
    const size_t slash = token.find('/');
    const std::string head = slash == std::string::npos ? token : token.substr(0, slash);
    int value = 0;
    const auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), value);
    if (ec != std::errc() || ptr != head.data() + head.size())
        throw ParseError(context + ": bad face index '" + token + "'");
    return value;
}

std::string format_double(double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    (void)ec;
    return std::string(buf, ptr);
}

} // namespace

Mesh load_obj(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());

    Mesh mesh;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        const std::string context = path.string() + ":" + std::to_string(line_no);
        if (tag == "v") {
            Vec3 v;
            if (!(ls >> v.x >> v.y >> v.z)) throw ParseError(context + ": malformed vertex line");
            mesh.vertices.push_back(v);
        } else if (tag == "f") {
            std::vector<int> idx;
            std::string token;
            while (ls >> token) idx.push_back(parse_face_index(token, context));
            if (idx.size() < 3) throw ParseError(context + ": face with fewer than 3 vertices");
            // Fan-triangulate; OBJ indices are 1-based (negatives count from the end).
            auto resolve = [&](int i) {
                const int n = mesh.vertex_count();
                const int r = i > 0 ? i - 1 : n + i;
                if (r < 0 || r >= n)
                    throw SchemaError(context + ": face index " + std::to_string(i) +
                                      " out of range");
                return r;
            };
            const int first = resolve(idx[0]);
            for (size_t k = 2; k < idx.size(); ++k)
                mesh.faces.push_back({first, resolve(idx[k - 1]), resolve(idx[k])});
        }
        // Other line types (comments, vn, vt, o, ...) are skipped.
    }

    const auto violations = validate(mesh);
    if (!violations.empty()) throw SchemaError(path.string() + ": " + violations.front());
    return mesh;
}

void save_obj(const Mesh& mesh, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    for (const Vec3& v : mesh.vertices)
        out << "v " << format_double(v.x) << ' ' << format_double(v.y) << ' '
            << format_double(v.z) << '\n';
    for (const auto& f : mesh.faces)
        out << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
    if (!out) throw IoError("write failed: " + path.string());
}

} // namespace meshcal

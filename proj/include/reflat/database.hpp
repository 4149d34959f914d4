#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reflat/classifier.hpp"

namespace reflat {

/// Sorted set of reflexive classes with dual links. On disk:
///   "RPDB" | version u8 | dimension u8 | record count u64 LE
///   then per record: binary normal form | dual index u32 LE
///   then CRC-32 (IEEE) of everything before it, u32 LE.
struct ClassDatabase {
    static constexpr std::uint8_t kVersion = 1;

    int dim = 0;
    std::vector<NormalFormKey> records;
    std::vector<std::uint32_t> dual_index;

    static ClassDatabase from_run(const ClassRun &run);

    size_t size() const { return records.size(); }
    std::optional<size_t> find(const NormalFormKey &k) const;
    size_t self_dual_count() const;

    std::string serialize() const;
    /// Throws CorruptDatabase or VersionMismatch.
    static ClassDatabase deserialize(std::string_view bytes);

    friend bool operator==(const ClassDatabase &, const ClassDatabase &) = default;
};

void write_db(const ClassDatabase &db, const std::string &path);
inline void write_db(const ClassRun &run, const std::string &path) { write_db(ClassDatabase::from_run(run), path); }
ClassDatabase read_db(const std::string &path);

/// Sorted union with dual indices recomputed. Throws DimensionMismatch.
ClassDatabase merge_dbs(const ClassDatabase &a, const ClassDatabase &b);

} // namespace reflat

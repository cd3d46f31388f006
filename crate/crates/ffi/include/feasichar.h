#ifndef FEASICHAR_H
#define FEASICHAR_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Bit flags selecting modules for [`fc_solve`].
 */
#define FC_MODULE_ADJOINT 1

#define FC_MODULE_MINIMAL 2

/**
 * Filter outcomes reported by [`fc_result_set_flags`].
 */
#define FC_FLAG_NO 0

#define FC_FLAG_YES 1

#define FC_FLAG_UNKNOWN -1

typedef enum FcStatus {
  FC_STATUS_OK = 0,
  FC_STATUS_NULL_POINTER = 1,
  FC_STATUS_INVALID_UTF8 = 2,
  FC_STATUS_PARSE = 3,
  FC_STATUS_INVALID_TABLE = 4,
  FC_STATUS_UNSUPPORTED = 5,
  FC_STATUS_IO = 6,
  FC_STATUS_OUT_OF_RANGE = 7,
  FC_STATUS_CONFIG = 8,
  FC_STATUS_PANIC = 9,
} FcStatus;

typedef struct FcBrauerTable FcBrauerTable;

typedef struct FcResultSet FcResultSet;

typedef struct FcRootSystem FcRootSystem;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the most recent failure on this thread; empty if none.
 * The pointer stays valid until the next failing call on this thread.
 */
const char *fc_last_error(void);

/**
 * Library version as a static NUL-terminated string.
 */
const char *fc_version(void);

/**
 * # Safety
 * `name` must be a NUL-terminated string and `out` a valid pointer.
 */
enum FcStatus fc_root_system_new(const char *name, struct FcRootSystem **out);

/**
 * # Safety
 * `rs` must come from [`fc_root_system_new`] and not be used afterwards.
 */
void fc_root_system_free(struct FcRootSystem *rs);

/**
 * # Safety
 * `rs` must be a live handle and `out` a valid pointer.
 */
enum FcStatus fc_root_system_rank(const struct FcRootSystem *rs, uintptr_t *out);

/**
 * # Safety
 * `rs` must be a live handle and `out` a valid pointer.
 */
enum FcStatus fc_root_system_positive_root_count(const struct FcRootSystem *rs, uintptr_t *out);

/**
 * Cartan matrix entry `<alpha_i, alpha_j^vee>`, 1-based indices.
 *
 * # Safety
 * `rs` must be a live handle and `out` a valid pointer.
 */
enum FcStatus fc_root_system_cartan_entry(const struct FcRootSystem *rs,
                                          uintptr_t i,
                                          uintptr_t j,
                                          int64_t *out);

/**
 * Number of conjugacy classes of elements of exact order `order` in the
 * simply connected group of type `group`.
 *
 * # Safety
 * `group` must be a NUL-terminated string and `out` a valid pointer.
 */
enum FcStatus fc_class_count(const char *group, uint32_t order, uint64_t *out);

/**
 * Parse a Brauer table from text.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum FcStatus fc_brauer_table_parse(const char *text, struct FcBrauerTable **out);

/**
 * Load a Brauer table from a path, or by name from the bundled data.
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out` a valid pointer.
 */
enum FcStatus fc_brauer_table_load(const char *name, struct FcBrauerTable **out);

/**
 * # Safety
 * `t` must come from a table constructor and not be used afterwards.
 */
void fc_brauer_table_free(struct FcBrauerTable *t);

/**
 * # Safety
 * `t` must be a live handle; the out pointers must be valid.
 */
enum FcStatus fc_brauer_table_shape(const struct FcBrauerTable *t,
                                    uintptr_t *classes,
                                    uintptr_t *irreducibles);

/**
 * Feasible characters of the table's group inside `group`.
 * `modules` is a combination of `FC_MODULE_ADJOINT` and `FC_MODULE_MINIMAL`;
 * elements of order above `max_order` make the call fail.
 *
 * # Safety
 * `group` must be a NUL-terminated string, `t` a live handle, `out` valid.
 */
enum FcStatus fc_solve(const char *group,
                       const struct FcBrauerTable *t,
                       uint32_t modules,
                       uint32_t max_order,
                       struct FcResultSet **out);

/**
 * # Safety
 * `r` must come from [`fc_solve`] and not be used afterwards.
 */
void fc_result_set_free(struct FcResultSet *r);

/**
 * # Safety
 * `r` must be a live handle and `out` a valid pointer.
 */
enum FcStatus fc_result_set_len(const struct FcResultSet *r, uintptr_t *out);

/**
 * Copy the multiplicities of row `row` on one module (`FC_MODULE_ADJOINT`
 * or `FC_MODULE_MINIMAL`) into `buf`. `*len` holds the capacity on entry
 * and the number of columns on return; a short buffer yields
 * `OutOfRange` with `*len` set to the size needed.
 *
 * # Safety
 * `r` must be a live handle, `len` valid, `buf` valid for `*len` writes.
 */
enum FcStatus fc_result_set_multiplicities(const struct FcResultSet *r,
                                           uintptr_t row,
                                           uint32_t module,
                                           uint32_t *buf,
                                           uintptr_t *len);

/**
 * # Safety
 * `r` must be a live handle and the out pointers valid.
 */
enum FcStatus fc_result_set_flags(const struct FcResultSet *r,
                                  uintptr_t row,
                                  int32_t *possprim,
                                  int32_t *nongcr);

/**
 * Render the result as the text table printed by the command-line tool.
 * Release the string with [`fc_string_free`].
 *
 * # Safety
 * `r` must be a live handle and `out` a valid pointer.
 */
enum FcStatus fc_result_set_render(const struct FcResultSet *r, char **out);

/**
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void fc_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* FEASICHAR_H */

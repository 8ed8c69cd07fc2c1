#ifndef EPSNET_H
#define EPSNET_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum EpsnetStatus {
  EPSNET_STATUS_OK = 0,
  EPSNET_STATUS_NULL_POINTER = 1,
  /**
   * Malformed input, bad parameters or mismatched dimensions.
   */
  EPSNET_STATUS_INVALID_INPUT = 2,
  /**
   * Degenerate geometry the requested operation cannot handle.
   */
  EPSNET_STATUS_DEGENERATE = 3,
  EPSNET_STATUS_BUDGET_EXCEEDED = 4,
  /**
   * A result does not fit the output type or buffer.
   */
  EPSNET_STATUS_OVERFLOW = 5,
  /**
   * An internal consistency check failed.
   */
  EPSNET_STATUS_INTERNAL = 6,
  EPSNET_STATUS_PANIC = 7,
} EpsnetStatus;

typedef enum EpsnetBuilder {
  /**
   * One point; `param` is ignored.
   */
  EPSNET_BUILDER_BOX_CENTERPOINT = 0,
  /**
   * Boxes in the plane with at most `param` points.
   */
  EPSNET_BUILDER_RECT = 1,
  /**
   * Halfplanes with at most `param` points.
   */
  EPSNET_BUILDER_HULL_WALK = 2,
  /**
   * Disks with two points; `param` is ignored.
   */
  EPSNET_BUILDER_DISK2 = 3,
} EpsnetBuilder;

/**
 * Opaque lower-bound instance.
 */
typedef struct EpsnetInstance EpsnetInstance;

/**
 * Opaque strong net.
 */
typedef struct EpsnetNet EpsnetNet;

/**
 * Opaque point set.
 */
typedef struct EpsnetPointSet EpsnetPointSet;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. Valid until
 * the next call into the library.
 */
const char *epsnet_last_error(void);

/**
 * Point set from `n * dim` integer coordinates, point by point.
 *
 * # Safety
 * `coords` must point to `n * dim` readable values and `out` to writable
 * storage for a handle.
 */
enum EpsnetStatus epsnet_pointset_new(size_t dim,
                                      const int64_t *coords,
                                      size_t n,
                                      struct EpsnetPointSet **out);

/**
 * Point set from its JSON encoding, or the points of an instance.
 *
 * # Safety
 * `json` must be a NUL-terminated string and `out` writable.
 */
enum EpsnetStatus epsnet_pointset_from_json(const char *json, struct EpsnetPointSet **out);

/**
 * Number of points, or 0 for a null handle.
 *
 * # Safety
 * `ps` must be null or a live handle.
 */
size_t epsnet_pointset_len(const struct EpsnetPointSet *ps);

/**
 * # Safety
 * `ps` must be null or a handle not yet freed.
 */
void epsnet_pointset_free(struct EpsnetPointSet *ps);

/**
 * Builds a strong net.
 *
 * # Safety
 * `ps` must be a live handle and `out` writable.
 */
enum EpsnetStatus epsnet_build(const struct EpsnetPointSet *ps,
                               enum EpsnetBuilder builder,
                               size_t param,
                               struct EpsnetNet **out);

/**
 * Number of net points, or 0 for a null handle.
 *
 * # Safety
 * `net` must be null or a live handle.
 */
size_t epsnet_net_size(const struct EpsnetNet *net);

/**
 * Copies the member indices into `buf` (capacity `cap`).
 *
 * # Safety
 * `net` must be a live handle and `buf` writable for `cap` values.
 */
enum EpsnetStatus epsnet_net_indices(const struct EpsnetNet *net, size_t *buf, size_t cap);

/**
 * Claimed epsilon as a reduced fraction.
 *
 * # Safety
 * `net` must be a live handle; `num` and `den` writable.
 */
enum EpsnetStatus epsnet_net_claimed_eps(const struct EpsnetNet *net, int64_t *num, int64_t *den);

/**
 * # Safety
 * `net` must be null or a handle not yet freed.
 */
void epsnet_net_free(struct EpsnetNet *net);

/**
 * Largest number of points in a range of the net's family that avoids it.
 *
 * # Safety
 * Both handles must be live and `max_count` writable.
 */
enum EpsnetStatus epsnet_max_avoiding(const struct EpsnetPointSet *ps,
                                      const struct EpsnetNet *net,
                                      size_t *max_count);

/**
 * A generator by name (`box-lb`, `rect2-lb`, ...).
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out` writable.
 */
enum EpsnetStatus epsnet_generate(const char *name,
                                  size_t d,
                                  size_t k,
                                  size_t i,
                                  struct EpsnetInstance **out);

/**
 * Copy of the instance's points.
 *
 * # Safety
 * `inst` must be a live handle and `out` writable.
 */
enum EpsnetStatus epsnet_instance_pointset(const struct EpsnetInstance *inst,
                                           struct EpsnetPointSet **out);

/**
 * Net size the instance's bound is about, or 0 for a null handle.
 *
 * # Safety
 * `inst` must be null or a live handle.
 */
size_t epsnet_instance_net_size(const struct EpsnetInstance *inst);

/**
 * Worst-case count every net of that size must leave.
 *
 * # Safety
 * `inst` must be null or a live handle.
 */
size_t epsnet_instance_required_count(const struct EpsnetInstance *inst);

/**
 * Exhaustive minimum over strong nets of the instance's size.
 *
 * # Safety
 * `inst` must be a live handle and `max_count` writable.
 */
enum EpsnetStatus epsnet_instance_verify(const struct EpsnetInstance *inst,
                                         uint64_t budget,
                                         size_t *max_count);

/**
 * JSON encoding of the instance; release with [`epsnet_string_free`].
 *
 * # Safety
 * `inst` must be a live handle and `out` writable.
 */
enum EpsnetStatus epsnet_instance_to_json(const struct EpsnetInstance *inst, char **out);

/**
 * # Safety
 * `inst` must be null or a handle not yet freed.
 */
void epsnet_instance_free(struct EpsnetInstance *inst);

/**
 * # Safety
 * `s` must be null or a string returned by this library and not yet freed.
 */
void epsnet_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EPSNET_H */

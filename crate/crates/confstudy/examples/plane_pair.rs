//! Wedge two parallel planes into a motion line, classify it, and push a
//! point along it. Run with `cargo run -p confstudy --example plane_pair`.

use confstudy::dorst::{eval_motion, motion_from_blade, sandwich_normalized, LineParam};
use confstudy::geometry::{classify_vector, embed_point, make_plane};
use confstudy::rational::{rat, rat_int};

fn main() -> Result<(), confstudy::Error> {
    let ex = [rat_int(1), rat_int(0), rat_int(0)];
    let p0 = make_plane(&ex, &rat_int(0))?;
    let p1 = make_plane(&ex, &rat_int(1))?;

    let motion = motion_from_blade(&p0, &p1)?;
    println!("kind = {}", motion.kind.name());
    println!("branch = {}", motion.branch.name());

    let rotor = eval_motion(&motion, &LineParam::Finite(rat(1, 2)));
    let origin = embed_point(&[rat_int(0), rat_int(0), rat_int(0)]);
    let image = sandwich_normalized(&rotor, &origin)?;
    println!("image = {:?}", classify_vector(&image));
    Ok(())
}

package demo;

// Contracts in a and b; c has none yet.
public class Service {
  public void a(int x) {
    if (x < 0) throw new IllegalArgumentException("negative");
  }

  public void b(String s) {
    if (s == null) throw new IllegalArgumentException("null");
  }

  public void c(int y) {
    y++;
  }
}

package entries;

public class TagEntry extends EntryItem {
  private static final String SCHEME = "tag://";
  public final String id;

  public TagEntry(String id) {
    this.id = id;
  }

  @Override
  public void setName(String name) {
    if (name != null) {
      if (!id.endsWith(name))
        throw new IllegalStateException("The display name and tag name need to be equal.");
      super.setName(name);
    } else {
      super.setName(id.substring(SCHEME.length()));
    }
  }
}
